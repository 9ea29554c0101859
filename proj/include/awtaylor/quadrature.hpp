#pragma once

// Trapezoidal quadrature kernels: periodic rule on circles and a sinh-mapped
// rule along the imaginary axis. Integrand evaluations are spread over
// threads; the sums are formed serially in ascending node order.

#include <functional>

#include "awtaylor/error.hpp"
#include "awtaylor/parallel.hpp"

namespace awt {

using ComplexFn = std::function<cplx(cplx)>;

struct QuadratureResult {
  cplx value{0.0, 0.0};
  long nodes = 0;           // integrand evaluations in the final rule
  double error_estimate = 0.0;  // |difference| between the last two refinements
};

struct CircleRule {
  double tol = 1e-12;
  long start_nodes = 64;
  long max_nodes = 1L << 16;
};

/// (1/2 pi i) * integral of g over the positively oriented circle, i.e.
/// (1/N) sum_j g(y_j) (y_j - center). The node count doubles (reusing the
/// previous nodes) until two successive estimates agree to
/// max(tol |I|, 32 eps mean|g (y - c)|); NumericalError at max_nodes.
QuadratureResult circle_integral(const ComplexFn& g, cplx center, double radius, const CircleRule& rule = {},
                                 Exec exec = Exec::parallel);

/// Same sum at a fixed node count, no refinement.
cplx circle_sum(const ComplexFn& g, cplx center, double radius, long nodes, Exec exec = Exec::parallel);

struct AxisRule {
  double tol = 1e-10;
  double t_center = 0.0;  // the map t = t_center + scale sinh(s) clusters nodes here
  double scale = 1.0;
  double start_step = 0.25;  // initial step in s
  long max_nodes = 1L << 20;
};

/// (1/2 pi i) * integral of g over the segment [-iT, iT] (upwards), i.e.
/// (1/2 pi) * integral_{-T}^{T} g(it) dt, computed in the variable s with
/// t = t_center + scale sinh(s). The step halves (reusing nodes) until two
/// successive estimates agree to tol.
QuadratureResult axis_integral(const ComplexFn& g, double T, const AxisRule& rule = {}, Exec exec = Exec::parallel);

}  // namespace awt
