#include "awtaylor/bounds.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <random>

namespace awt {

UpperBoundSweep sweep_upper_bound(double q, long samples, double max_power, std::uint64_t seed, Exec exec) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("sweep_upper_bound: requires 0 < q < 1");
  if (samples <= 0 || !(max_power > 0.0)) throw DomainError("sweep_upper_bound: need samples > 0, max_power > 0");

  // Points are drawn serially so the sample set does not depend on threads.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_max = max_power * std::log(1.0 / q);
  std::vector<cplx> points(static_cast<std::size_t>(samples));
  for (auto& x : points) {
    double log_r = log_max * unit(rng);
    if (log_r == 0.0) log_r = 1e-12;
    x = std::polar(std::exp(log_r), 2.0 * std::numbers::pi * unit(rng));
  }

  std::vector<double> margin(points.size());
  for_each_index(points.size(), exec, [&](std::size_t i) {
    const Polar h = q_pochhammer_inf_polar(points[i], cplx(q, 0.0));
    margin[i] = h.log_abs - log_pochhammer_upper_bound(points[i], q);
  });

  UpperBoundSweep out;
  out.q = q;
  out.samples = samples;
  out.worst_log_margin = -std::numeric_limits<double>::infinity();
  for (double m : margin) {
    if (m > 0.0) ++out.violations;
    out.worst_log_margin = std::max(out.worst_log_margin, m);
  }
  return out;
}

LowerRatioSweep sweep_lower_ratio(double q, double rho, double delta, const std::vector<double>& radii,
                                  long samples, std::uint64_t seed, Exec exec) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("sweep_lower_ratio: requires 0 < q < 1");
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("sweep_lower_ratio: requires 0 < rho < 1");
  if (!(delta > 0.0)) throw DomainError("sweep_lower_ratio: requires delta > 0");
  if (radii.empty() || samples < static_cast<long>(radii.size()))
    throw DomainError("sweep_lower_ratio: need at least one sample per radius");
  for (double r : radii)
    if (!(r >= delta)) throw DomainError("sweep_lower_ratio: every radius must be >= delta");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const long per = samples / static_cast<long>(radii.size());
  std::vector<cplx> points;
  std::vector<std::size_t> owner;
  for (std::size_t r = 0; r < radii.size(); ++r) {
    const long count = per + (r < static_cast<std::size_t>(samples % static_cast<long>(radii.size())) ? 1 : 0);
    long accepted = 0;
    for (long attempt = 0; accepted < count; ++attempt) {
      if (attempt > 1000 * count) throw NumericalError("sweep_lower_ratio: circle is almost entirely excluded");
      const cplx x = std::polar(radii[r], 2.0 * std::numbers::pi * unit(rng));
      if (!set_A_membership(x, q, rho)) continue;
      points.push_back(x);
      owner.push_back(r);
      ++accepted;
    }
  }

  std::vector<double> log_ratio(points.size());
  for_each_index(points.size(), exec,
                 [&](std::size_t i) { log_ratio[i] = log_pochhammer_lower_ratio(points[i], q); });

  LowerRatioSweep out;
  out.q = q;
  out.rho = rho;
  out.delta = delta;
  out.per_radius.resize(radii.size());
  for (std::size_t r = 0; r < radii.size(); ++r) {
    out.per_radius[r].abs_x = radii[r];
    out.per_radius[r].infimum = std::numeric_limits<double>::infinity();
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto& slot = out.per_radius[owner[i]];
    ++slot.samples;
    slot.infimum = std::min(slot.infimum, std::exp(log_ratio[i]));
  }
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& s : out.per_radius) {
    lo = std::min(lo, s.infimum);
    hi = std::max(hi, s.infimum);
  }
  out.overall_infimum = lo;
  out.spread = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace awt
