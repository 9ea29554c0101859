#include "awtaylor/qcore.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace awt {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

cplx unit(cplx z) {
  const double r = std::abs(z);
  return r == 0.0 ? cplx(1.0, 0.0) : z / r;
}

// Direct truncated product for |x| <= 1, |q| < 1. The factors stay within
// [1 - |x|, 1 + |x|] so the running product cannot overflow.
cplx direct_product(cplx x, cplx q, const Tolerances& tol) {
  const double aq = std::abs(q);
  cplx result(1.0, 0.0);
  cplx term = x;  // q^j x
  for (int j = 0; j < tol.max_terms; ++j) {
    const double t = std::abs(term);
    if (t / (1.0 - aq) < tol.series_tol) return result;
    result *= 1.0 - term;
    if (result == cplx(0.0, 0.0)) return result;
    term *= q;
  }
  throw NumericalError("q_pochhammer_inf: max_terms reached before the tail bound fell below series_tol");
}

}  // namespace

std::optional<std::string> Tolerances::validate() const {
  if (!(series_tol > 0.0) || !(identity_tol > 0.0) || max_terms <= 0)
    throw DomainError("tolerances must be strictly positive");
  if (!(series_tol < identity_tol))
    return std::string("series_tol is not below identity_tol; truncation error may dominate residuals");
  return std::nullopt;
}

Polar Polar::from(cplx z) {
  const double r = std::abs(z);
  if (r == 0.0) return {kNegInf, cplx(1.0, 0.0)};
  return {std::log(r), z / r};
}

cplx Polar::value() const {
  if (is_zero()) return {0.0, 0.0};
  return phase * std::exp(log_abs);
}

Polar& Polar::operator*=(const Polar& o) {
  log_abs += o.log_abs;
  phase = unit(phase * o.phase);
  return *this;
}

Polar& Polar::operator/=(const Polar& o) {
  if (o.is_zero()) throw DomainError("division by an exact zero");
  log_abs -= o.log_abs;
  phase = unit(phase / o.phase);
  return *this;
}

cplx q_pochhammer(cplx x, cplx q, int n) {
  if (n < 0) throw DomainError("q_pochhammer: n must be nonnegative");
  return q_pochhammer<cplx>(x, q, n);
}

cplx rising_factorial(cplx u, int n) {
  if (n < 0) throw DomainError("rising_factorial: n must be nonnegative");
  return rising_factorial<cplx>(u, n);
}

cplx q_binomial(int r, int k, cplx q) {
  if (std::abs(q - 1.0) < 1e-12) return q_binomial_generic<cplx>(r, k, cplx(1.0, 0.0));
  return q_binomial_generic<cplx>(r, k, q);
}

PochhammerDecomposition pochhammer_decompose(cplx x, cplx q) {
  const double ax = std::abs(x);
  const double aq = std::abs(q);
  if (!(ax > 1.0)) throw DomainError("pochhammer_decompose: requires |x| > 1");
  if (!(aq > 0.0 && aq < 1.0)) throw DomainError("pochhammer_decompose: requires 0 < |q| < 1");

  const double log_inv_q = -std::log(aq);
  const double ratio = std::log(ax) / log_inv_q;
  int m = static_cast<int>(std::ceil(ratio));
  // Boundary cases |x| = q^{-m} are decided with a few ulps of slack so that
  // exact powers land on the documented side.
  const double slack = 8.0 * std::numeric_limits<double>::epsilon();
  auto scaled = [&](int e) { return std::pow(aq, e) * ax; };
  while (m > 1 && scaled(m - 1) <= 1.0 + slack) --m;
  while (scaled(m) > 1.0 + slack) ++m;
  if (m < 1) m = 1;

  PochhammerDecomposition d;
  d.m = m;
  d.rho = std::clamp(m - ratio, 0.0, std::nextafter(1.0, 0.0));
  const double choose2 = 0.5 * m * (m - 1.0);
  d.log_abs_head = m * std::log(ax) - choose2 * log_inv_q;
  d.head_factor = std::pow(x, m) * std::pow(q, choose2);
  d.a = std::pow(q, m) * x;
  d.b = std::pow(q, 1 - m) / x;
  return d;
}

Polar q_pochhammer_inf_polar(cplx x, cplx q, const Tolerances& tol) {
  const double aq = std::abs(q);
  if (!(aq < 1.0)) throw DomainError("q_pochhammer_inf: base must satisfy |q| < 1");
  if (std::abs(x) <= 1.0) return Polar::from(direct_product(x, q, tol));

  const PochhammerDecomposition d = pochhammer_decompose(x, q);
  Polar tail = Polar::from(direct_product(d.a, q, tol));
  if (tail.is_zero()) return tail;
  Polar finite = Polar::from(q_pochhammer<cplx>(d.b, q, d.m));
  if (finite.is_zero()) return finite;

  // Phase of (-x)^m q^{m(m-1)/2}, accumulated from the argument sums.
  const double choose2 = 0.5 * d.m * (d.m - 1.0);
  const double angle = d.m * std::arg(-x) + choose2 * std::arg(q);
  Polar head{d.log_abs_head, std::polar(1.0, std::remainder(angle, 2.0 * std::numbers::pi))};
  return head * tail * finite;
}

cplx q_pochhammer_inf(cplx x, cplx q, const Tolerances& tol) {
  return q_pochhammer_inf_polar(x, q, tol).value();
}

double pochhammer_growth_exponent(double abs_x, double q) {
  return 0.5 + std::log(abs_x) / (2.0 * std::log(1.0 / q));
}

namespace {

void require_real_base(double q, const char* where) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError(std::string(where) + ": requires 0 < q < 1");
}

}  // namespace

double log_pochhammer_upper_bound(cplx x, double q) {
  require_real_base(q, "pochhammer_upper_bound");
  if (x == cplx(0.0, 0.0)) throw DomainError("pochhammer_upper_bound: x must be nonzero");
  const double h_minus_one = std::real(q_pochhammer_inf(cplx(-1.0, 0.0), cplx(q, 0.0)));
  const double log_cq = -std::log(q) / 8.0 + 2.0 * std::log(h_minus_one);
  const double ax = std::abs(x);
  return log_cq + pochhammer_growth_exponent(ax, q) * std::log(ax);
}

double pochhammer_upper_bound(cplx x, double q) {
  return std::exp(log_pochhammer_upper_bound(x, q));
}

bool set_A_membership(cplx x, double q, double rho) {
  require_real_base(q, "set_A_membership");
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("set_A_membership: requires 0 < rho < 1");
  const double ax = std::abs(x);
  if (ax == 0.0) return true;
  const double log_inv_q = -std::log(q);
  // Only disks whose annulus q^{-j}[1-rho, 1+rho] meets |x| can contain x.
  const double lo = std::log(ax / (1.0 + rho)) / log_inv_q;
  const double hi = std::log(ax / (1.0 - rho)) / log_inv_q;
  const long jlo = std::max(0L, static_cast<long>(std::floor(lo)));
  const long jhi = static_cast<long>(std::ceil(hi));
  for (long j = jlo; j <= jhi; ++j) {
    const double centre = std::pow(q, -static_cast<double>(j));
    if (std::abs(x - centre) < rho * centre) return false;
  }
  return true;
}

double log_pochhammer_lower_ratio(cplx x, double q) {
  require_real_base(q, "pochhammer_lower_ratio");
  if (x == cplx(0.0, 0.0)) throw DomainError("pochhammer_lower_ratio: x must be nonzero");
  const double ax = std::abs(x);
  const Polar h = q_pochhammer_inf_polar(x, cplx(q, 0.0));
  return h.log_abs - pochhammer_growth_exponent(ax, q) * std::log(ax);
}

double pochhammer_lower_ratio(cplx x, double q) {
  return std::exp(log_pochhammer_lower_ratio(x, q));
}

}  // namespace awt
