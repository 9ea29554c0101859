#include "awtaylor/binom.hpp"

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "awtaylor/awop.hpp"

namespace awt {

namespace {

using rational = boost::multiprecision::cpp_rational;

rational exact(double d) {
  if (!std::isfinite(d)) throw DomainError("table2 exact: non-finite parameter");
  int e = 0;
  const double m = std::frexp(d, &e);
  // m * 2^53 is an integer for every double.
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  rational r(mant);
  e -= 53;
  const rational two(2);
  rational scale(1);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) scale *= two;
  if (e < 0) return rational(r / scale);
  return rational(r * scale);
}

ParamList row_params(FormTag row, const RowArgs<cplx>& a, int n) {
  ParamList p{{"row", to_string(row)}, {"n", static_cast<long long>(n)}};
  switch (row) {
    case FormTag::C:
    case FormTag::A:
      p.insert(p.end(), {{"x", a.x}, {"y", a.y}, {"z", a.z}});
      break;
    case FormTag::G:
      p.insert(p.end(), {{"x", a.x}, {"y", a.y}, {"z", a.z}, {"q", a.q}});
      break;
    case FormTag::Q:
      p.insert(p.end(), {{"u", a.u}, {"v", a.v}, {"w", a.w}});
      break;
    case FormTag::T:
      p.insert(p.end(), {{"u", a.u}, {"v", a.v}, {"w", a.w}, {"q", a.q}});
      break;
  }
  return p;
}

bool same_polynomial(const QuadraticSymmetricPolynomial& a, const QuadraticSymmetricPolynomial& b) {
  const auto close = [](cplx s, cplx t) { return std::abs(s - t) <= 1e-12 * (1.0 + std::abs(s) + std::abs(t)); };
  return close(a.a, b.a) && close(a.b, b.b) && close(a.c, b.c);
}

}  // namespace

VerificationReport general_binomial_check(const PSequence& y, const PSequence& z, cplx x, int n,
                                          const VerifyOptions& o) {
  if (n < 0) throw DomainError("binomial: n must be nonnegative");
  if (!same_polynomial(y.polynomial(), z.polynomial()))
    throw DomainError("binomial: the two sequences must share the same polynomial P");
  const cplx lambda = z.lambda();
  const cplx q = lambda * lambda;

  cplx lhs(1.0, 0.0);
  for (int k = 0; k < n; ++k) lhs *= x - z.at(k);
  cplx rhs(0.0, 0.0);
  for (int k = 0; k <= n; ++k) {
    cplx term = q_binomial(n, k, q) * std::pow(lambda, -k * (n - k));
    for (int j = 0; j < k; ++j) term *= x - y.at(j);
    const cplx yk = y.at_half(k);
    for (int j = 0; j < n - k; ++j) term *= yk - z.at_half(2L * j + k);
    rhs += term;
  }

  VerificationReport r;
  r.formula_id = "binomial";
  const auto& form = z.canonical();
  r.params = {{"form", form ? to_string(form->tag) : std::string("raw")},
              {"n", static_cast<long long>(n)},
              {"x", x},
              {"lambda", lambda},
              {"y0", y.base_point()},
              {"z0", z.base_point()}};
  r.lhs = lhs;
  r.rhs = rhs;
  r.diagnostics.terms = n + 1;
  finalize(r, o.threshold.value_or(kBinomialThreshold));
  return r;
}

VerificationReport table2_check(FormTag row, const RowArgs<cplx>& args, int n, const VerifyOptions& o) {
  if ((row == FormTag::G || row == FormTag::T) && args.q == cplx(0.0, 0.0))
    throw DomainError("table2: q must be nonzero");
  if (row == FormTag::T && (args.u == cplx(0.0, 0.0) || args.v == cplx(0.0, 0.0)))
    throw DomainError("table2 row T: u and v must be nonzero");
  // The alternating sums cancel heavily for some parameters; extended
  // precision keeps the double-rounded result accurate.
  using wide = boost::multiprecision::cpp_complex_quad;
  const auto w = [](cplx z) { return wide(z.real(), z.imag()); };
  const RowArgs<wide> wa{w(args.x), w(args.y), w(args.z), w(args.u), w(args.v), w(args.w), w(args.q)};
  const auto [lhs, rhs] = table2_sides<wide>(row, wa, n);
  VerificationReport r;
  r.formula_id = "table2";
  r.params = row_params(row, args, n);
  r.lhs = cplx(lhs.real().convert_to<double>(), lhs.imag().convert_to<double>());
  r.rhs = cplx(rhs.real().convert_to<double>(), rhs.imag().convert_to<double>());
  r.diagnostics.terms = n + 1;
  finalize(r, o.threshold.value_or(kBinomialThreshold));
  return r;
}

ExactResidual table2_exact(FormTag row, const RowArgs<double>& a, int n) {
  if (n > kExactCap) throw DomainError("table2 exact: n above the exact-mode cap");
  RowArgs<rational> e{exact(a.x), exact(a.y), exact(a.z), exact(a.u), exact(a.v), exact(a.w), exact(a.q)};
  if (row == FormTag::T && (e.u == 0 || e.v == 0)) throw DomainError("table2 row T: u and v must be nonzero");
  if (row == FormTag::T && e.q == 1) throw DomainError("table2 row T: q = 1 not allowed");
  const auto [lhs, rhs] = table2_sides<rational>(row, e, n);
  const rational diff = lhs - rhs;
  return {diff == 0, diff.str()};
}

cplx table2_g_hypergeometric(cplx x, cplx y, cplx z, cplx q, int n, const Tolerances& tol) {
  if (x == cplx(0.0, 0.0) || y == cplx(0.0, 0.0) || z == cplx(0.0, 0.0))
    throw DomainError("table2 G: x, y, z must be nonzero");
  const cplx a = y / x;
  const cplx b = z / y;
  const SeriesValue s = phi_series({{std::pow(q, -n), a}, {std::pow(q, 1 - n) / b}, q, q / (a * b)}, tol);
  return std::pow(x, n) * std::pow(a, n) * q_pochhammer(b, q, n) * s.value;
}

cplx table2_t_hypergeometric(cplx u, cplx v, cplx w, cplx q, int n, const Tolerances& tol) {
  if (u == cplx(0.0, 0.0) || v == cplx(0.0, 0.0) || w == cplx(0.0, 0.0))
    throw DomainError("table2 T: u, v, w must be nonzero");
  const SeriesValue s =
      phi_series({{std::pow(q, -n), v * u, v / u}, {w * v, std::pow(q, 1 - n) * v / w}, q, q}, tol);
  return q_pochhammer(w * v, q, n) * q_pochhammer(w / v, q, n) / q_pochhammer(q, q, n) * s.value;
}

VerificationReport phi_partial_identity_check(int n, int k, const PSequence& seq, cplx w, const VerifyOptions& o) {
  if (k < 0 || k > n) throw DomainError("phi-partial: need 0 <= k <= n");
  const cplx lambda = seq.lambda();
  if (lambda == cplx(0.0, 0.0)) throw DomainError("phi-partial: lambda must be nonzero");

  AnalyticFunction f;
  f.eval = [&seq, n](cplx y) { return phi(seq, n, y); };
  const PSequence through_w(seq.polynomial(), w, +1);
  const std::vector<cplx> nodes = symmetric_nodes(through_w, k);
  const QuadratureResult lhs = partial_on_nodes(f, nodes, auto_contour(f.domain, nodes), o.exec);

  cplx coef(1.0, 0.0);
  for (int j = 0; j < k; ++j) coef *= lambda_bracket(n - j, lambda) / lambda_bracket(k - j, lambda);

  VerificationReport r;
  r.formula_id = "phi-partial";
  r.params = {{"n", static_cast<long long>(n)}, {"k", static_cast<long long>(k)}, {"lambda", lambda},
              {"x0", seq.base_point()}, {"w", w}};
  r.lhs = lhs.value;
  r.rhs = coef * phi(seq, n - k, w);
  r.diagnostics.quadrature_nodes = lhs.nodes;
  r.diagnostics.quadrature_error = lhs.error_estimate;
  finalize(r, o.threshold.value_or(1e-9));
  return r;
}

}  // namespace awt
