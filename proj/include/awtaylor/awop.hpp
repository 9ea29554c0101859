#pragma once

// The Askey-Wilson divided-difference operator D, its iterates, and the
// normalized divided differences d_k f computed by contour quadrature or by
// residue sums.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "awtaylor/psequence.hpp"
#include "awtaylor/quadrature.hpp"

namespace awt {

struct Entire {};
struct Disk {
  cplx center{0.0, 0.0};
  double radius = 1.0;  // open disk
};
struct LeftHalfPlane {
  double edge = 0.0;  // Re z < edge
};
struct RightHalfPlane {
  double edge = 0.0;  // Re z > edge
};
using Domain = std::variant<Entire, Disk, LeftHalfPlane, RightHalfPlane>;

bool domain_contains(const Domain& d, cplx z);
/// Distance from z to the boundary (infinity for Entire, <= 0 outside).
double distance_to_boundary(const Domain& d, cplx z);

/// |f(z)| <= C (1 + |z|)^M on the domain.
struct Growth {
  double C = 1.0;
  double M = 0.0;
};

struct AnalyticFunction {
  ComplexFn eval;
  Domain domain = Entire{};
  std::optional<Growth> growth;

  /// Evaluates f, rejecting points outside the declared domain.
  cplx operator()(cplx z) const;
};

/// Samples the domain and returns a warning when the declared growth bound
/// is exceeded; never throws for a violated bound.
std::optional<std::string> check_growth(const AnalyticFunction& f, int samples = 64, unsigned seed = 7);

struct Circle {
  cplx center{0.0, 0.0};
  double radius = 1.0;
};
struct ImaginaryAxis {
  double T = 64.0;
};

struct Contour {
  std::variant<Circle, ImaginaryAxis> kind = Circle{};
  long nodes = 1L << 16;  // node cap for the adaptive rule
  double tol = 1e-12;

  void validate() const;
};

Contour circle_contour(cplx center, double radius, long nodes = 1L << 16);

/// Circle enclosing `points` inside the domain of f: centred at the origin
/// with radius 1.5 max|z| + 1 for entire functions, shrunk towards the
/// boundary of a disk domain, and hugging the points for half-plane domains.
Contour auto_contour(const Domain& domain, const std::vector<cplx>& points);

double merge_threshold(cplx u, cplx v);

/// (f(u) - f(v)) / (u - v), or the contour form for nearly coincident points.
cplx divided_difference(const AnalyticFunction& f, cplx u, cplx v, Exec exec = Exec::parallel);

cplx aw_apply(const QuadraticSymmetricPolynomial& P, const AnalyticFunction& f, cplx x, Exec exec = Exec::parallel);

constexpr int kMaxIterate = 12;

/// D^k f(x) by full binary recursion.
cplx aw_iterate(const QuadraticSymmetricPolynomial& P, const AnalyticFunction& f, cplx x, int k,
                Exec exec = Exec::parallel);

/// (1/2 pi i) * contour integral of f(y) / prod_j (y - z_j).
QuadratureResult partial_on_nodes(const AnalyticFunction& f, const std::vector<cplx>& nodes, const Contour& contour,
                                  Exec exec = Exec::parallel);

/// The nodes x_{j - k/2}, j = 0..k, of the sequence based at x_0.
std::vector<cplx> symmetric_nodes(const PSequence& seq, int k);

/// d_k f(x_0) = (1/2 pi i) * contour integral of f(y) / Phi_{k+1}(x_0, y).
cplx partial_k_contour(const AnalyticFunction& f, const PSequence& seq, int k,
                       const std::optional<Contour>& contour = std::nullopt, Exec exec = Exec::parallel);

/// sum_j f(z_j) / prod_{i != j} (z_j - z_i).
cplx partial_k_residues(const AnalyticFunction& f, const std::vector<cplx>& nodes, int k);

/// prod_{j<k} lambda_bracket(k - j, lambda).
cplx dk_coefficient(int k, cplx lambda);

}  // namespace awt
