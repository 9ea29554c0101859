#include "awtaylor/qseries.hpp"

#include <cmath>
#include <string>

namespace awt {

namespace {

constexpr double kZeroFactor = 1e-13;

Polar poch_inf(cplx x, cplx q, const Tolerances& tol) { return q_pochhammer_inf_polar(x, q, tol); }

void require_nonzero(const Polar& p, const char* what) {
  if (p.is_zero()) throw DomainError(std::string(what) + ": a denominator product vanishes");
}

void require_unit_base(double q, const char* what) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError(std::string(what) + ": requires 0 < q < 1");
}

Diagnostics series_diag(const SeriesValue& s) {
  Diagnostics d;
  d.terms = s.terms;
  return d;
}

}  // namespace

SeriesValue phi_series(const BasicHypergeometricSpec& spec, const Tolerances& tol) {
  const cplx q = spec.q;
  const double aq = std::abs(q);

  // A numerator parameter q^{-m} stops the series after the m-th term.
  bool terminates = spec.z == cplx(0.0, 0.0);
  for (const cplx& a : spec.upper) {
    cplx qm(1.0, 0.0);
    for (int m = 0; m < tol.max_terms && !terminates; ++m) {
      if (std::abs(1.0 - qm * a) <= kZeroFactor) terminates = true;
      qm *= q;
      if (aq < 1.0 && std::abs(qm * a) < 1e-3) break;
    }
  }
  if (!terminates && !(aq < 1.0 && std::abs(spec.z) < 1.0))
    throw DomainError("phi_series: nonterminating series needs |q| < 1 and |z| < 1");

  SeriesValue out;
  cplx term(1.0, 0.0);
  cplx qk(1.0, 0.0);
  int quiet = 0;
  for (int k = 0; k < tol.max_terms; ++k) {
    out.value += term;
    out.terms = k + 1;
    if (term == cplx(0.0, 0.0)) {
      out.terminated = true;
      return out;
    }
    cplx num(1.0, 0.0);
    for (const cplx& a : spec.upper) {
      const cplx f = 1.0 - qk * a;
      if (std::abs(f) <= kZeroFactor) {
        out.terminated = true;
        return out;
      }
      num *= f;
    }
    cplx den = 1.0 - qk * q;
    for (const cplx& b : spec.lower) den *= 1.0 - qk * b;
    for (const cplx& b : spec.lower)
      if (std::abs(1.0 - qk * b) <= kZeroFactor)
        throw DomainError("phi_series: a denominator factor vanishes before the series terminates");
    term *= num / den * spec.z;
    qk *= q;
    if (std::abs(term) < tol.series_tol * std::max(1.0, std::abs(out.value))) {
      if (++quiet == 5) return out;
    } else {
      quiet = 0;
    }
  }
  throw NumericalError("phi_series: max_terms reached without convergence");
}

VerificationReport verify_q_gauss(cplx alpha, cplx beta, cplx xi, cplx x, cplx q, const VerifyOptions& o) {
  if (!(std::abs(q) < 1.0)) throw DomainError("q-gauss: requires |q| < 1");
  if (x == cplx(0.0, 0.0) || beta == cplx(0.0, 0.0)) throw DomainError("q-gauss: x and beta must be nonzero");
  if (!(std::abs(beta * x) < 1.0)) throw DomainError("q-gauss: requires |beta x| < 1");

  const Polar den = poch_inf(beta * x, q, o.tol) * poch_inf(alpha * xi, q, o.tol);
  require_nonzero(den, "q-gauss");
  const SeriesValue s = phi_series({{xi / x, alpha / beta}, {alpha * xi}, q, beta * x}, o.tol);

  VerificationReport r;
  r.formula_id = "q-gauss";
  r.params = {{"alpha", alpha}, {"beta", beta}, {"xi", xi}, {"x", x}, {"q", q}};
  r.lhs = s.value;
  r.rhs = (poch_inf(alpha * x, q, o.tol) * poch_inf(beta * xi, q, o.tol) / den).value();
  r.diagnostics = series_diag(s);
  finalize(r, o.threshold.value_or(kSeriesThreshold));
  return r;
}

cplx geometric_partial_k(cplx alpha, cplx beta, cplx z, cplx q, int k, const Tolerances& tol) {
  if (k < 0) throw DomainError("geometric_partial_k: k must be nonnegative");
  if (!(std::abs(q) < 1.0)) throw DomainError("geometric_partial_k: requires |q| < 1");
  const cplx half = std::pow(q, 0.5 * k);
  const Polar den = poch_inf(beta * z / half, q, tol);
  require_nonzero(den, "geometric_partial_k");
  cplx coef(1.0, 0.0);
  cplx qj(1.0, 0.0);
  for (int j = 0; j < k; ++j) {
    coef *= (beta - qj * alpha) / (1.0 - qj * q);
    qj *= q;
  }
  return coef * (poch_inf(alpha * z * half, q, tol) / den).value();
}

cplx joukowski_inverse(cplx y) {
  const cplx v = y + std::sqrt(y - 1.0) * std::sqrt(y + 1.0);
  return std::abs(v) >= 1.0 ? v : 1.0 / v;
}

Polar f_gamma(cplx v, double gamma, double q, const Tolerances& tol) {
  if (v == cplx(0.0, 0.0)) throw DomainError("f_gamma: v must be nonzero");
  return poch_inf(gamma * v, q, tol) * poch_inf(gamma / v, q, tol);
}

cplx f_alpha_beta(cplx u, double alpha, double beta, double q, const Tolerances& tol) {
  require_unit_base(q, "f_alpha_beta");
  if (u == cplx(0.0, 0.0)) throw DomainError("f_alpha_beta: u must be nonzero");
  const Polar den = f_gamma(u, beta, q, tol);
  require_nonzero(den, "f_alpha_beta");
  return (f_gamma(u, alpha, q, tol) / den).value();
}

AnalyticFunction trig_function(double alpha, double beta, double q, const Tolerances& tol) {
  require_unit_base(q, "trig_function");
  if (!(beta > 0.0)) throw DomainError("trig_function: requires beta > 0");
  AnalyticFunction f;
  f.eval = [=](cplx y) { return f_alpha_beta(joukowski_inverse(y), alpha, beta, q, tol); };
  // Poles sit where beta v or beta/v is q^{-m}: v > 0, hence y >= 1.
  f.domain = LeftHalfPlane{1.0};
  return f;
}

cplx trig_partial_k(double alpha, double beta, double xi, double q, int k, const Tolerances& tol) {
  require_unit_base(q, "trig_partial_k");
  if (k < 0) throw DomainError("trig_partial_k: k must be nonnegative");
  if (!(xi < 0.0)) throw DomainError("trig_partial_k: requires xi < 0");
  const cplx cq(q, 0.0);
  const cplx den = q_pochhammer(cq, cq, k) * q_pochhammer(alpha * xi, cq, k) *
                   q_pochhammer(beta / (std::pow(q, k) * xi), cq, k);
  if (std::abs(den) <= kZeroFactor) throw DomainError("trig_partial_k: a denominator product vanishes");
  return std::pow(2.0 * beta, k) * q_pochhammer(alpha / beta, cq, k) / den * f_alpha_beta(xi, alpha, beta, q, tol);
}

SeriesValue s_infinity_trig(double alpha, double beta, double xi, cplx u, double q, const Tolerances& tol) {
  require_unit_base(q, "s_infinity_trig");
  if (!(xi < 0.0) || !(beta > 0.0)) throw DomainError("s_infinity_trig: requires xi < 0 and beta > 0");
  const Polar den = f_gamma(xi, beta, q, tol);
  require_nonzero(den, "s_infinity_trig");
  const Polar pre = f_gamma(xi, alpha, q, tol) / den;
  SeriesValue s = phi_series({{alpha / beta, xi * u, xi / u}, {alpha * xi, q * xi / beta}, q, q}, tol);
  s.value *= pre.value();
  return s;
}

PSequence trig_sequence(double xi, double q) {
  return PSequence(CanonicalForm::trigonometric(std::sqrt(cplx(q, 0.0)), xi));
}

VerificationReport verify_new_formula(double alpha, double beta, double xi, cplx u, double q,
                                      const VerifyOptions& o) {
  require_unit_base(q, "new-saalschutz");
  if (!std::isfinite(alpha) || alpha == 0.0)
    throw DomainError("new-saalschutz: alpha must be real and nonzero (finite growth exponent)");
  if (!(beta > 0.0)) throw DomainError("new-saalschutz: requires beta > 0");
  if (!(xi < 0.0)) throw DomainError("new-saalschutz: requires xi < 0");
  if (!(u.real() < 0.0) || !(std::abs(u) >= 1.0)) throw DomainError("new-saalschutz: requires Re u < 0 and |u| >= 1");

  const cplx x = 0.5 * (u + 1.0 / u);
  const SeriesValue s = s_infinity_trig(alpha, beta, xi, u, q, o.tol);
  const InfiniteRemainder rem =
      remainder_infinite(trig_function(alpha, beta, q, o.tol), trig_sequence(xi, q), x, HalfPlane::left, o.axis, o.exec);

  VerificationReport r;
  r.formula_id = "new-saalschutz";
  r.params = {{"alpha", alpha}, {"beta", beta}, {"xi", xi}, {"u", u}, {"q", q},
              {"growth_M", std::log(std::abs(alpha / beta)) / std::log(1.0 / q)}};
  r.lhs = f_alpha_beta(u, alpha, beta, q, o.tol);
  r.rhs = s.value + rem.value;
  r.diagnostics = {s.terms, rem.nodes, rem.T, rem.tail_estimate, rem.quadrature_error};
  finalize(r, o.threshold.value_or(kIntegralThreshold));
  return r;
}

VerificationReport verify_nonterminating_q_saalschutz(cplx alpha, cplx beta, cplx xi, cplx u, cplx q,
                                                      const VerifyOptions& o) {
  if (!(std::abs(q) < 1.0)) throw DomainError("nt-saalschutz: requires |q| < 1");
  if (u == cplx(0.0, 0.0) || beta == cplx(0.0, 0.0) || xi == cplx(0.0, 0.0))
    throw DomainError("nt-saalschutz: u, beta and xi must be nonzero");
  const auto& t = o.tol;
  const Polar fbu = poch_inf(beta * u, q, t) * poch_inf(beta / u, q, t);
  const Polar fxu = poch_inf(xi * u, q, t) * poch_inf(xi / u, q, t);
  const Polar fbx = poch_inf(beta * xi, q, t) * poch_inf(beta / xi, q, t);
  const Polar fxb = poch_inf(xi * beta, q, t) * poch_inf(xi / beta, q, t);
  require_nonzero(fbu * fxu * fbx * fxb, "nt-saalschutz");

  const Polar lhs = poch_inf(alpha * u, q, t) * poch_inf(alpha / u, q, t) / (fbu * fxu);
  const Polar pre1 = poch_inf(alpha * xi, q, t) * poch_inf(alpha / xi, q, t) / (fbx * fxu);
  const Polar pre2 = poch_inf(alpha * beta, q, t) * poch_inf(alpha / beta, q, t) / (fbu * fxb);

  long terms = 0;
  cplx rhs(0.0, 0.0);
  if (!pre1.is_zero()) {
    const SeriesValue s = phi_series({{alpha / beta, xi * u, xi / u}, {alpha * xi, q * xi / beta}, q, q}, t);
    rhs += pre1.value() * s.value;
    terms += s.terms;
  }
  if (!pre2.is_zero()) {
    const SeriesValue s = phi_series({{alpha / xi, beta * u, beta / u}, {alpha * beta, q * beta / xi}, q, q}, t);
    rhs += pre2.value() * s.value;
    terms += s.terms;
  }

  VerificationReport r;
  r.formula_id = "nt-saalschutz";
  r.params = {{"alpha", alpha}, {"beta", beta}, {"xi", xi}, {"u", u}, {"q", q}};
  r.lhs = lhs.value();
  r.rhs = rhs;
  r.diagnostics.terms = terms;
  finalize(r, o.threshold.value_or(kSeriesThreshold));
  return r;
}

VerificationReport verify_q_vandermonde_nonsym(double alpha, double beta, double xi, cplx x, double q,
                                               const VerifyOptions& o) {
  require_unit_base(q, "q-vandermonde");
  if (!std::isfinite(alpha)) throw DomainError("q-vandermonde: alpha must be real");
  if (!(beta > 0.0)) throw DomainError("q-vandermonde: requires beta > 0");
  if (!(xi < 0.0)) throw DomainError("q-vandermonde: requires xi < 0");
  if (!(x.real() < 0.0)) throw DomainError("q-vandermonde: requires Re x < 0");
  const auto& t = o.tol;
  const cplx cq(q, 0.0);

  const Polar den_x = poch_inf(beta * x, cq, t);
  const Polar den_xi = poch_inf(beta * xi, cq, t);
  require_nonzero(den_x * den_xi, "q-vandermonde");
  const SeriesValue s = phi_series({{alpha / beta, x / xi}, {q / (beta * xi)}, cq, cq}, t);

  AnalyticFunction f;
  f.eval = [=](cplx y) { return (poch_inf(alpha * y, cq, t) / poch_inf(beta * y, cq, t)).value(); };
  f.domain = LeftHalfPlane{1.0 / beta};  // poles at q^{-m}/beta
  const PSequence seq(CanonicalForm::geometric(std::sqrt(cq), xi), -1);
  const InfiniteRemainder rem = remainder_infinite(f, seq, x, HalfPlane::left, o.axis, o.exec);

  VerificationReport r;
  r.formula_id = "q-vandermonde";
  r.params = {{"alpha", alpha}, {"beta", beta}, {"xi", xi}, {"x", x}, {"q", q}};
  r.lhs = (poch_inf(alpha * x, cq, t) / den_x).value();
  r.rhs = (poch_inf(alpha * xi, cq, t) / den_xi).value() * s.value + rem.value;
  r.diagnostics = {s.terms, rem.nodes, rem.T, rem.tail_estimate, rem.quadrature_error};
  finalize(r, o.threshold.value_or(kIntegralThreshold));
  return r;
}

}  // namespace awt
