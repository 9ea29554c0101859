#include "awtaylor/awop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace awt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_circle_in_domain(const Domain& d, const Circle& c) {
  if (!(distance_to_boundary(d, c.center) > c.radius))
    throw DomainError("contour leaves the declared domain of the function");
}

void require_enclosed(const Circle& c, const std::vector<cplx>& points) {
  for (const cplx& z : points) {
    const double r = std::abs(z - c.center);
    if (std::abs(r - c.radius) <= 1e-12 * c.radius) throw DomainError("a node lies on the contour");
    if (r > c.radius) throw DomainError("contour does not enclose every node");
  }
}

}  // namespace

bool domain_contains(const Domain& d, cplx z) { return distance_to_boundary(d, z) > 0.0; }

double distance_to_boundary(const Domain& d, cplx z) {
  return std::visit(overloaded{
                        [](const Entire&) { return kInf; },
                        [&](const Disk& k) { return k.radius - std::abs(z - k.center); },
                        [&](const LeftHalfPlane& h) { return h.edge - z.real(); },
                        [&](const RightHalfPlane& h) { return z.real() - h.edge; },
                    },
                    d);
}

cplx AnalyticFunction::operator()(cplx z) const {
  if (!domain_contains(domain, z)) {
    std::ostringstream os;
    os << "evaluation point (" << z.real() << ", " << z.imag() << ") outside the declared domain";
    throw DomainError(os.str());
  }
  return eval(z);
}

std::optional<std::string> check_growth(const AnalyticFunction& f, int samples, unsigned seed) {
  if (!f.growth) return std::nullopt;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int violations = 0;
  int tried = 0;
  for (int i = 0; i < samples * 8 && tried < samples; ++i) {
    const cplx z = std::polar(std::pow(10.0, -1.0 + 3.0 * unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    if (!domain_contains(f.domain, z)) continue;
    ++tried;
    const double bound = f.growth->C * std::pow(1.0 + std::abs(z), f.growth->M);
    if (std::abs(f.eval(z)) > bound) ++violations;
  }
  if (violations == 0) return std::nullopt;
  return "declared growth bound exceeded at " + std::to_string(violations) + " of " + std::to_string(tried) +
         " sampled points";
}

void Contour::validate() const {
  std::visit(overloaded{
                 [](const Circle& c) {
                   if (!(c.radius > 0.0)) throw DomainError("contour: radius must be positive");
                 },
                 [](const ImaginaryAxis& a) {
                   if (!(a.T > 0.0)) throw DomainError("contour: truncation T must be positive");
                 },
             },
             kind);
  if (nodes < 16) throw DomainError("contour: at least 16 nodes required");
  if (!(tol > 0.0)) throw DomainError("contour: tolerance must be positive");
}

Contour circle_contour(cplx center, double radius, long nodes) {
  Contour c;
  c.kind = Circle{center, radius};
  c.nodes = nodes;
  c.validate();
  return c;
}

Contour auto_contour(const Domain& domain, const std::vector<cplx>& points) {
  if (points.empty()) throw DomainError("auto_contour: no points to enclose");
  for (const cplx& z : points)
    if (!domain_contains(domain, z)) throw DomainError("auto_contour: a node lies outside the domain");

  const auto spread_from = [&](cplx c) {
    double m = 0.0;
    for (const cplx& z : points) m = std::max(m, std::abs(z - c));
    return m;
  };

  if (std::holds_alternative<Entire>(domain)) return circle_contour(0.0, 1.5 * spread_from(0.0) + 1.0);
  if (const auto* disk = std::get_if<Disk>(&domain)) {
    const double m = spread_from(disk->center);
    double r = 1.5 * m + 1.0;
    if (r >= disk->radius) r = 0.5 * (m + disk->radius);
    return circle_contour(disk->center, r);
  }
  // Half planes: a circle about the bounding box of the points, kept clear
  // of the edge.
  double lo_re = kInf, hi_re = -kInf, lo_im = kInf, hi_im = -kInf;
  for (const cplx& z : points) {
    lo_re = std::min(lo_re, z.real());
    hi_re = std::max(hi_re, z.real());
    lo_im = std::min(lo_im, z.imag());
    hi_im = std::max(hi_im, z.imag());
  }
  const cplx c(0.5 * (lo_re + hi_re), 0.5 * (lo_im + hi_im));
  const double rho = spread_from(c);
  const double gap = distance_to_boundary(domain, c) - rho;
  if (!(gap > 0.0)) throw DomainError("auto_contour: points cannot be enclosed inside the half plane");
  return circle_contour(c, rho + std::min(0.5 * gap, 1.0 + 0.5 * rho));
}

double merge_threshold(cplx u, cplx v) { return 1e-8 * (1.0 + std::abs(u) + std::abs(v)); }

cplx divided_difference(const AnalyticFunction& f, cplx u, cplx v, Exec exec) {
  const double sep = std::abs(u - v);
  if (sep > merge_threshold(u, v)) return (f(u) - f(v)) / (u - v);

  const cplx c = 0.5 * (u + v);
  // A radius tied to the separation alone would make nested applications
  // cancel catastrophically; use the largest comfortable circle instead.
  double r = std::min(0.25 * (1.0 + std::abs(u)), 0.5 * distance_to_boundary(f.domain, c));
  r = std::max(r, 10.0 * sep + 1e-6);
  const Circle circle{c, r};
  require_circle_in_domain(f.domain, circle);
  const auto g = [&](cplx y) { return f(y) / ((y - u) * (y - v)); };
  return circle_integral(g, c, r, {}, exec).value;
}

cplx aw_apply(const QuadraticSymmetricPolynomial& P, const AnalyticFunction& f, cplx x, Exec exec) {
  const cplx root = std::sqrt(P.delta(x));
  return divided_difference(f, P.A(x) + root, P.A(x) - root, exec);
}

cplx aw_iterate(const QuadraticSymmetricPolynomial& P, const AnalyticFunction& f, cplx x, int k, Exec exec) {
  if (k < 0) throw DomainError("aw_iterate: k must be nonnegative");
  if (k > kMaxIterate) throw DomainError("aw_iterate: k > 12 rejected (cost grows like 2^k)");
  if (k == 0) return f(x);
  AnalyticFunction inner;
  inner.domain = f.domain;
  inner.eval = [&P, &f, k, exec](cplx y) { return aw_iterate(P, f, y, k - 1, exec); };
  return aw_apply(P, inner, x, exec);
}

QuadratureResult partial_on_nodes(const AnalyticFunction& f, const std::vector<cplx>& nodes, const Contour& contour,
                                  Exec exec) {
  contour.validate();
  const auto* circle = std::get_if<Circle>(&contour.kind);
  if (!circle) throw DomainError("partial_on_nodes: requires a circular contour");
  require_circle_in_domain(f.domain, *circle);
  require_enclosed(*circle, nodes);
  const auto g = [&](cplx y) {
    cplx den(1.0, 0.0);
    for (const cplx& z : nodes) den *= y - z;
    return f(y) / den;
  };
  CircleRule rule;
  rule.tol = contour.tol;
  rule.max_nodes = contour.nodes;
  rule.start_nodes = std::min<long>(rule.start_nodes, contour.nodes);
  return circle_integral(g, circle->center, circle->radius, rule, exec);
}

std::vector<cplx> symmetric_nodes(const PSequence& seq, int k) {
  if (k < 0) throw DomainError("symmetric_nodes: k must be nonnegative");
  std::vector<cplx> nodes(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) nodes[static_cast<std::size_t>(j)] = seq.at_half(2L * j - k);
  return nodes;
}

cplx partial_k_contour(const AnalyticFunction& f, const PSequence& seq, int k, const std::optional<Contour>& contour,
                       Exec exec) {
  const std::vector<cplx> nodes = symmetric_nodes(seq, k);
  const Contour c = contour ? *contour : auto_contour(f.domain, nodes);
  return partial_on_nodes(f, nodes, c, exec).value;
}

cplx partial_k_residues(const AnalyticFunction& f, const std::vector<cplx>& nodes, int k) {
  if (k < 0 || nodes.size() != static_cast<std::size_t>(k) + 1)
    throw DomainError("partial_k_residues: need exactly k + 1 nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(nodes[i] - nodes[j]) <= merge_threshold(nodes[i], nodes[j]))
        throw DomainError("partial_k_residues: node collision");
  cplx sum(0.0, 0.0);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    cplx den(1.0, 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (i != j) den *= nodes[j] - nodes[i];
    sum += f(nodes[j]) / den;
  }
  return sum;
}

cplx dk_coefficient(int k, cplx lambda) {
  if (lambda == cplx(0.0, 0.0)) throw DomainError("dk_coefficient: lambda must be nonzero");
  if (k < 0) throw DomainError("dk_coefficient: k must be nonnegative");
  cplx result(1.0, 0.0);
  for (int j = 0; j < k; ++j) result *= lambda_bracket(k - j, lambda);
  return result;
}

}  // namespace awt
