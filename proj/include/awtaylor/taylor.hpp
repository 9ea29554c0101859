#pragma once

// Taylor polynomials with respect to a P-sequence, their contour remainder,
// the entire function H(x) = prod_j (1 - x/z_j) and the remainder along the
// imaginary axis.

#include <optional>
#include <vector>

#include "awtaylor/awop.hpp"
#include "awtaylor/qcore.hpp"

namespace awt {

enum class CoefficientMethod { automatic, contour, residues };

struct TaylorExpansion {
  PSequence sequence;
  int order = 0;
  std::vector<cplx> nodes;         // z_0 .. z_n
  std::vector<cplx> coefficients;  // c_k = d_k f(z_{k/2})
};

/// c_k from the node set {z_0, ..., z_k} of the stored sequence. With
/// `automatic`, each coefficient uses the contour rule unless the nodes
/// crowd the boundary of the available circle, then the residue sum.
TaylorExpansion taylor_coefficients(const AnalyticFunction& f, const PSequence& seq, int n,
                                    CoefficientMethod method = CoefficientMethod::contour,
                                    const std::optional<Contour>& contour = std::nullopt, Exec exec = Exec::parallel);

/// sum_k c_k prod_{j<k} (x - z_j), nested from the highest order down.
cplx taylor_eval(const TaylorExpansion& e, cplx x);

/// (1/2 pi i) * contour integral of f(y)/(y - x) prod_{j<=n} (x - z_j)/(y - z_j).
cplx remainder_contour(const AnalyticFunction& f, const PSequence& seq, int n, cplx x,
                       const std::optional<Contour>& contour = std::nullopt, Exec exec = Exec::parallel);

/// r M_r / (r - x) ((x + z)/(r - z))^{n+1}; requires r > x + 2z.
double remainder_bound(double r, double M_r, double x_abs, double z_sup, int n);

/// Checks that |z_k| grows at least geometrically over k = 16..48 and
/// returns the smallest observed ratio |z_{k+1}/z_k|.
double summability_ratio(const PSequence& seq);

/// H(x) = prod_{j>=0} (1 - x/z_j) over the integer-index nodes, in polar
/// form. Nodes are cached up to the radius given at construction.
class EntireProduct {
 public:
  EntireProduct(const PSequence& seq, double radius, const Tolerances& tol = {});
  Polar operator()(cplx x) const;
  double ratio() const { return ratio_; }

 private:
  PSequence seq_;
  Tolerances tol_;
  double ratio_;
  std::vector<cplx> nodes_;
};

cplx h_product(const PSequence& seq, cplx x, const Tolerances& tol = {});

enum class HalfPlane { left, right };

struct InfiniteRemainder {
  cplx value{0.0, 0.0};
  double tail_estimate = 0.0;
  double T = 0.0;
  long nodes = 0;
  double quadrature_error = 0.0;
};

struct AxisOptions {
  double tol = 1e-10;     // absolute, for both tail and refinement
  double T_start = 64.0;
  double T_max = 1048576.0;
  long max_nodes = 1L << 20;
  Tolerances series{};
};

/// +-(1/2 pi i) * integral over the imaginary axis of f(y)/(y - x) H(x)/H(y),
/// with the sign -1 for nodes on the positive half line.
InfiniteRemainder remainder_infinite(const AnalyticFunction& f, const PSequence& seq, cplx x, HalfPlane side,
                                     const AxisOptions& opts = {}, Exec exec = Exec::parallel);

struct TaylorLimit {
  cplx value{0.0, 0.0};
  int terms = 0;
};

/// Partial sums of the Taylor series until 5 consecutive terms are below
/// max(series_tol, 8 eps) max(1, |S|).
TaylorLimit taylor_limit(const AnalyticFunction& f, const PSequence& seq, cplx x, const Tolerances& tol = {},
                         CoefficientMethod method = CoefficientMethod::automatic, Exec exec = Exec::parallel);

}  // namespace awt
