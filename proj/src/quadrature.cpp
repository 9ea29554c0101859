#include "awtaylor/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace awt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_finite(cplx v, const char* where) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NumericalError(std::string(where) + ": integrand is not finite at a quadrature node");
}

}  // namespace

cplx circle_sum(const ComplexFn& g, cplx center, double radius, long nodes, Exec exec) {
  if (!(radius > 0.0)) throw DomainError("circle_sum: radius must be positive");
  if (nodes < 16) throw DomainError("circle_sum: at least 16 nodes required");
  std::vector<cplx> w(static_cast<std::size_t>(nodes));
  for_each_index(w.size(), exec, [&](std::size_t j) {
    const cplx d = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes));
    w[j] = g(center + d) * d;
    check_finite(w[j], "circle_sum");
  });
  cplx s(0.0, 0.0);
  for (const cplx& v : w) s += v;
  return s / static_cast<double>(nodes);
}

QuadratureResult circle_integral(const ComplexFn& g, cplx center, double radius, const CircleRule& rule,
                                 Exec exec) {
  if (!(radius > 0.0)) throw DomainError("circle_integral: radius must be positive");
  if (rule.start_nodes < 16 || rule.max_nodes < rule.start_nodes)
    throw DomainError("circle_integral: need 16 <= start_nodes <= max_nodes");

  // Raw node sums are kept so a refinement only evaluates the new odd nodes.
  long n = rule.start_nodes;
  std::vector<cplx> w(static_cast<std::size_t>(n));
  for_each_index(w.size(), exec, [&](std::size_t j) {
    const cplx d = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    w[j] = g(center + d) * d;
    check_finite(w[j], "circle_integral");
  });
  cplx sum(0.0, 0.0);
  double mag = 0.0;
  for (const cplx& v : w) {
    sum += v;
    mag += std::abs(v);
  }
  cplx estimate = sum / static_cast<double>(n);

  while (2 * n <= rule.max_nodes) {
    const long m = 2 * n;
    std::vector<cplx> odd(static_cast<std::size_t>(n));
    for_each_index(odd.size(), exec, [&](std::size_t j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(2 * j + 1) / static_cast<double>(m);
      const cplx d = std::polar(radius, angle);
      odd[j] = g(center + d) * d;
      check_finite(odd[j], "circle_integral");
    });
    for (const cplx& v : odd) {
      sum += v;
      mag += std::abs(v);
    }
    const cplx next = sum / static_cast<double>(m);
    const double diff = std::abs(next - estimate);
    const double floor = 32.0 * kEps * mag / static_cast<double>(m);
    n = m;
    estimate = next;
    if (diff <= std::max(rule.tol * std::abs(next), floor)) return {next, n, diff};
  }
  throw NumericalError("circle_integral: no convergence within " + std::to_string(rule.max_nodes) + " nodes");
}

QuadratureResult axis_integral(const ComplexFn& g, double T, const AxisRule& rule, Exec exec) {
  if (!(T > 0.0)) throw DomainError("axis_integral: truncation T must be positive");
  if (!(rule.scale > 0.0) || !(rule.start_step > 0.0)) throw DomainError("axis_integral: bad rule");

  const double s_lo = std::asinh((-T - rule.t_center) / rule.scale);
  const double s_hi = std::asinh((T - rule.t_center) / rule.scale);
  const double width = s_hi - s_lo;
  long intervals = std::max<long>(16, static_cast<long>(std::ceil(width / rule.start_step)));

  // f(s) = g(i t(s)) t'(s) / (2 pi); endpoints carry weight 1/2.
  auto integrand = [&](double s) {
    const double t = rule.t_center + rule.scale * std::sinh(s);
    const cplx v = g(cplx(0.0, t)) * (rule.scale * std::cosh(s)) / (2.0 * std::numbers::pi);
    check_finite(v, "axis_integral");
    return v;
  };

  std::vector<cplx> w(static_cast<std::size_t>(intervals + 1));
  for_each_index(w.size(), exec, [&](std::size_t j) {
    const double s = s_lo + width * static_cast<double>(j) / static_cast<double>(intervals);
    w[j] = integrand(s);
  });
  cplx sum(0.0, 0.0);
  for (std::size_t j = 0; j < w.size(); ++j) sum += (j == 0 || j + 1 == w.size()) ? 0.5 * w[j] : w[j];
  cplx estimate = sum * (width / static_cast<double>(intervals));

  while (2 * intervals + 1 <= rule.max_nodes) {
    const long m = 2 * intervals;
    std::vector<cplx> mid(static_cast<std::size_t>(intervals));
    for_each_index(mid.size(), exec, [&](std::size_t j) {
      const double s = s_lo + width * static_cast<double>(2 * j + 1) / static_cast<double>(m);
      mid[j] = integrand(s);
    });
    for (const cplx& v : mid) sum += v;
    const cplx next = sum * (width / static_cast<double>(m));
    const double diff = std::abs(next - estimate);
    intervals = m;
    estimate = next;
    if (diff <= rule.tol) return {next, intervals + 1, diff};
  }
  throw NumericalError("axis_integral: no convergence within " + std::to_string(rule.max_nodes) + " nodes");
}

}  // namespace awt
