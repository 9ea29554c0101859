#pragma once

// Randomised sweeps of the two-sided growth estimate for (x;q)_inf.

#include <cstdint>
#include <vector>

#include "awtaylor/parallel.hpp"
#include "awtaylor/qcore.hpp"

namespace awt {

struct UpperBoundSweep {
  double q = 0.0;
  long samples = 0;
  long violations = 0;
  double worst_log_margin = 0.0;  // max over samples of log|h(x)| - log bound (<= 0 when no violation)
};

/// Samples x with log|x| uniform on (0, max_power * log q^{-1}) and uniform
/// phase, and counts samples where |(x;q)_inf| exceeds the upper bound.
UpperBoundSweep sweep_upper_bound(double q, long samples, double max_power, std::uint64_t seed,
                                  Exec exec = Exec::parallel);

struct RatioInfimum {
  double abs_x = 0.0;  // radius of the sampled circle
  long samples = 0;
  double infimum = 0.0;
};

struct LowerRatioSweep {
  double q = 0.0;
  double rho = 0.0;
  double delta = 0.0;
  std::vector<RatioInfimum> per_radius;
  double overall_infimum = 0.0;
  double spread = 0.0;  // max / min of the per-radius infima
};

/// For each radius, draws points of the excluded-disk set (rejection on the
/// phase) with |x| >= delta and records the infimum of pochhammer_lower_ratio.
/// `samples` is the total over all radii.
LowerRatioSweep sweep_lower_ratio(double q, double rho, double delta, const std::vector<double>& radii,
                                  long samples, std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace awt
