#include "awtaylor/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace awt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::vector<cplx> integer_nodes(const PSequence& seq, int n) {
  std::vector<cplx> z(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) z[static_cast<std::size_t>(j)] = seq.at(j);
  return z;
}

bool nodes_distinct(const std::vector<cplx>& z) {
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(z[i] - z[j]) <= merge_threshold(z[i], z[j])) return false;
  return true;
}

double crowding(const Contour& c, const std::vector<cplx>& z) {
  const auto& circle = std::get<Circle>(c.kind);
  double m = 0.0;
  for (const cplx& p : z) m = std::max(m, std::abs(p - circle.center));
  return m / circle.radius;
}

// Whether the k-th coefficient is taken from the residue sum.
bool use_residues(CoefficientMethod method, const Domain& domain, const std::vector<cplx>& z) {
  if (method == CoefficientMethod::residues) return true;
  if (method == CoefficientMethod::contour) return false;
  if (!nodes_distinct(z)) return false;
  try {
    return crowding(auto_contour(domain, z), z) > 0.9;
  } catch (const DomainError&) {
    return true;
  }
}

// c_k prod_{j<k} (x - z_j) from the residue sum, each summand formed as a
// product of ratios of comparable factors so that neither the node
// products nor f overflow on their own.
cplx newton_term_residues(const std::vector<Polar>& fz, const std::vector<cplx>& z, int k, cplx x) {
  cplx sum(0.0, 0.0);
  for (int j = 0; j <= k; ++j) {
    Polar term = fz[static_cast<std::size_t>(j)];
    for (int i = 0; i < k; ++i) {
      if (i == j) continue;
      term *= Polar::from((x - z[i]) / (z[j] - z[i]));
    }
    if (j < k) term *= Polar::from((x - z[j]) / (z[j] - z[k]));
    sum += term.value();
  }
  return sum;
}

}  // namespace

TaylorExpansion taylor_coefficients(const AnalyticFunction& f, const PSequence& seq, int n, CoefficientMethod method,
                                    const std::optional<Contour>& contour, Exec exec) {
  if (n < 0) throw DomainError("taylor_coefficients: order must be nonnegative");
  TaylorExpansion e{seq, n, integer_nodes(seq, n), {}};
  e.coefficients.resize(e.nodes.size());
  for (int k = 0; k <= n; ++k) {
    const std::vector<cplx> z(e.nodes.begin(), e.nodes.begin() + k + 1);
    cplx c;
    if (contour) {
      c = partial_on_nodes(f, z, *contour, exec).value;
    } else if (use_residues(method, f.domain, z)) {
      c = partial_k_residues(f, z, k);
    } else {
      c = partial_on_nodes(f, z, auto_contour(f.domain, z), exec).value;
    }
    e.coefficients[static_cast<std::size_t>(k)] = c;
  }
  return e;
}

cplx taylor_eval(const TaylorExpansion& e, cplx x) {
  if (e.coefficients.empty()) return {0.0, 0.0};
  cplx s = e.coefficients.back();
  for (int k = e.order - 1; k >= 0; --k) s = e.coefficients[static_cast<std::size_t>(k)] + (x - e.nodes[k]) * s;
  return s;
}

cplx remainder_contour(const AnalyticFunction& f, const PSequence& seq, int n, cplx x,
                       const std::optional<Contour>& contour, Exec exec) {
  if (n < 0) throw DomainError("remainder_contour: order must be nonnegative");
  const std::vector<cplx> z = integer_nodes(seq, n);
  std::vector<cplx> enclosed = z;
  enclosed.push_back(x);
  const Contour c = contour ? *contour : auto_contour(f.domain, enclosed);
  c.validate();
  const auto* circle = std::get_if<Circle>(&c.kind);
  if (!circle) throw DomainError("remainder_contour: requires a circular contour");
  if (!(distance_to_boundary(f.domain, circle->center) > circle->radius))
    throw DomainError("remainder_contour: contour leaves the declared domain");
  for (const cplx& p : enclosed)
    if (!(std::abs(p - circle->center) < circle->radius * (1.0 - 1e-12)))
      throw DomainError("remainder_contour: contour does not enclose x and the nodes");

  const auto g = [&](cplx y) {
    cplx ratio(1.0, 0.0);
    for (const cplx& zj : z) ratio *= (x - zj) / (y - zj);
    return f(y) * ratio / (y - x);
  };
  CircleRule rule;
  rule.tol = c.tol;
  rule.max_nodes = c.nodes;
  rule.start_nodes = std::min<long>(rule.start_nodes, c.nodes);
  return circle_integral(g, circle->center, circle->radius, rule, exec).value;
}

double remainder_bound(double r, double M_r, double x_abs, double z_sup, int n) {
  if (n < 0 || !(M_r >= 0.0) || !(x_abs >= 0.0) || !(z_sup >= 0.0))
    throw DomainError("remainder_bound: invalid arguments");
  if (!(r > x_abs + 2.0 * z_sup)) throw DomainError("remainder_bound: requires r > x + 2z");
  return r * M_r / (r - x_abs) * std::pow((x_abs + z_sup) / (r - z_sup), n + 1);
}

double summability_ratio(const PSequence& seq) {
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 16; k < 48; ++k) {
    const double a = std::abs(seq.at(k));
    const double b = std::abs(seq.at(k + 1));
    if (a == 0.0) throw DomainError("summability check: a node vanishes");
    worst = std::min(worst, b / a);
  }
  // polynomial growth also has ratios > 1, but they decay towards 1
  const double early = std::pow(std::abs(seq.at(24)) / std::abs(seq.at(16)), 1.0 / 8.0);
  const double late = std::pow(std::abs(seq.at(48)) / std::abs(seq.at(40)), 1.0 / 8.0);
  if (!(late - 1.0 >= 0.9 * (early - 1.0))) worst = 1.0;
  if (!(worst >= 1.0 + 1e-6))
    throw DomainError("summability check failed: nodes do not grow geometrically, sum 1/|z_k| not certified");
  return worst;
}

EntireProduct::EntireProduct(const PSequence& seq, double radius, const Tolerances& tol)
    : seq_(seq), tol_(tol), ratio_(summability_ratio(seq)) {
  for (int j = 0; j < tol_.max_terms; ++j) {
    const cplx z = seq_.at(j);
    if (z == cplx(0.0, 0.0)) throw DomainError("H: a node vanishes");
    nodes_.push_back(z);
    if (j >= 48 && radius / std::abs(z) / (1.0 - 1.0 / ratio_) < tol_.series_tol) break;
  }
}

Polar EntireProduct::operator()(cplx x) const {
  Polar h;
  const double ax = std::abs(x);
  for (int j = 0; j < tol_.max_terms; ++j) {
    const cplx z = static_cast<std::size_t>(j) < nodes_.size() ? nodes_[j] : seq_.at(j);
    const double t = ax / std::abs(z);
    if (j >= 48 && t / (1.0 - 1.0 / ratio_) < tol_.series_tol) return h;
    h *= Polar::from(1.0 - x / z);
    if (h.is_zero()) return h;
  }
  throw NumericalError("H: max_terms reached before the tail bound fell below series_tol");
}

cplx h_product(const PSequence& seq, cplx x, const Tolerances& tol) {
  return EntireProduct(seq, std::abs(x), tol)(x).value();
}

InfiniteRemainder remainder_infinite(const AnalyticFunction& f, const PSequence& seq, cplx x, HalfPlane side,
                                     const AxisOptions& opts, Exec exec) {
  const double sgn = side == HalfPlane::left ? 1.0 : -1.0;
  if (!(sgn * x.real() < 0.0)) throw DomainError("remainder_infinite: x must lie in the open half plane of the nodes");
  for (int j = 0; j < 48; ++j) {
    const cplx z = seq.at(j);
    if (std::abs(z.imag()) > 1e-12 * (1.0 + std::abs(z)) || !(sgn * z.real() < 0.0))
      throw DomainError("remainder_infinite: nodes must lie on the real half line of the chosen side");
  }
  if (!(distance_to_boundary(f.domain, cplx(0.0, 0.0)) > 0.0) ||
      std::holds_alternative<Disk>(f.domain) ||
      (side == HalfPlane::left && std::holds_alternative<RightHalfPlane>(f.domain)) ||
      (side == HalfPlane::right && std::holds_alternative<LeftHalfPlane>(f.domain)))
    throw DomainError("remainder_infinite: f must be analytic on a neighbourhood of the closed half plane");

  const EntireProduct H(seq, std::max(std::abs(x), 1.0), opts.series);
  const Polar hx = H(x);
  InfiniteRemainder out;
  if (hx.is_zero()) return out;

  const auto g = [&](cplx y) {
    Polar r = hx / H(y);
    r *= Polar::from(f.eval(y) / (y - x));
    return r.value();
  };
  const auto tail = [&](double T) {
    return (std::abs(g(cplx(0.0, T))) + std::abs(g(cplx(0.0, -T)))) * T / (2.0 * std::numbers::pi);
  };

  double T = opts.T_start;
  double t_est = tail(T);
  while (t_est > opts.tol && 2.0 * T <= opts.T_max) {
    T *= 2.0;
    t_est = tail(T);
  }
  if (t_est > opts.tol)
    throw NumericalError("remainder_infinite: tail estimate above tolerance at the maximal truncation");

  AxisRule rule;
  rule.tol = opts.tol;
  rule.t_center = x.imag();
  rule.scale = std::clamp(std::min(std::abs(x.real()), std::abs(seq.at(0).real())), 1e-3, 1.0);
  rule.max_nodes = opts.max_nodes;
  const QuadratureResult q = axis_integral(g, T, rule, exec);
  out.value = sgn * q.value;
  out.tail_estimate = t_est;
  out.T = T;
  out.nodes = q.nodes;
  out.quadrature_error = q.error_estimate;
  return out;
}

TaylorLimit taylor_limit(const AnalyticFunction& f, const PSequence& seq, cplx x, const Tolerances& tol,
                         CoefficientMethod method, Exec exec) {
  const double cutoff = std::max(tol.series_tol, 8.0 * kEps);
  std::vector<cplx> z;
  std::vector<Polar> fz;
  Polar prefix;  // prod_{j<k} (x - z_j)
  TaylorLimit out;
  int quiet = 0;
  for (int k = 0; k < tol.max_terms; ++k) {
    z.push_back(seq.at(k));
    fz.push_back(Polar::from(f(z.back())));
    cplx term;
    if (use_residues(method, f.domain, z)) {
      term = newton_term_residues(fz, z, k, x);
    } else {
      Polar c = Polar::from(partial_on_nodes(f, z, auto_contour(f.domain, z), exec).value);
      term = (c * prefix).value();
    }
    prefix *= Polar::from(x - z.back());
    out.value += term;
    out.terms = k + 1;
    if (std::abs(term) < cutoff * std::max(1.0, std::abs(out.value))) {
      if (++quiet == 5) return out;
    } else {
      quiet = 0;
    }
    if (prefix.is_zero()) return out;  // x is a node: the series terminates
  }
  throw NumericalError("taylor_limit: max_terms reached without stabilization");
}

}  // namespace awt
