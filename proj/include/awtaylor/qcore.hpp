#pragma once

// q-shifted factorials, rising factorials, q-binomial coefficients and the
// growth estimates for (x;q)_inf used by the integral remainder machinery.

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "awtaylor/error.hpp"

namespace awt {

struct Tolerances {
  double series_tol = 1e-16;   // term-size cutoff for infinite sums/products
  int max_terms = 10000;
  double identity_tol = 1e-10; // pass/fail threshold on residuals

  // Throws DomainError unless every field is strictly positive. Returns a
  // warning when series_tol is not below identity_tol.
  std::optional<std::string> validate() const;
};

/// A complex number held as log|z| and a unit phase, so that products whose
/// magnitude over- or underflows a double can still be combined.
struct Polar {
  double log_abs = 0.0;  // -inf encodes an exact zero
  cplx phase{1.0, 0.0};

  static Polar from(cplx z);
  cplx value() const;
  bool is_zero() const { return std::isinf(log_abs) && log_abs < 0; }

  Polar& operator*=(const Polar& o);
  Polar& operator/=(const Polar& o);
  friend Polar operator*(Polar a, const Polar& b) { return a *= b; }
  friend Polar operator/(Polar a, const Polar& b) { return a /= b; }
};

/// (x;q)_n = prod_{k<n} (1 - q^k x). Generic over any field-like scalar so
/// the binomial identities can also be checked in exact rational arithmetic.
template <class T>
T q_pochhammer(const T& x, const T& q, int n) {
  T result(1);
  T qk(1);
  for (int k = 0; k < n; ++k) {
    result *= T(1) - qk * x;
    qk *= q;
  }
  return result;
}

/// (u)_n = u (u+1) ... (u+n-1).
template <class T>
T rising_factorial(const T& u, int n) {
  T result(1);
  for (int k = 0; k < n; ++k) result *= u + T(k);
  return result;
}

/// Generalized binomial coefficient x (x-1) ... (x-k+1) / k!.
template <class T>
T generalized_binomial(const T& x, int k) {
  T result(1);
  for (int j = 0; j < k; ++j) result = result * (x - T(j)) / T(j + 1);
  return result;
}

/// q-binomial coefficient via the product form
/// prod_{j=1..k} (1 - q^{r-k+j}) / (1 - q^j); q = 1 gives C(r, k).
template <class T>
T q_binomial_generic(int r, int k, const T& q) {
  if (k < 0 || k > r) throw DomainError("q_binomial: need 0 <= k <= r");
  T result(1);
  if (q == T(1)) {
    for (int j = 1; j <= k; ++j) result = result * T(r - k + j) / T(j);
    return result;
  }
  for (int j = 1; j <= k; ++j) {
    T num(1), den(1), qp(1);
    for (int i = 0; i < r - k + j; ++i) qp *= q;
    num = T(1) - qp;
    qp = T(1);
    for (int i = 0; i < j; ++i) qp *= q;
    den = T(1) - qp;
    result = result * num / den;
  }
  return result;
}

cplx q_pochhammer(cplx x, cplx q, int n);
cplx rising_factorial(cplx u, int n);

/// q-binomial coefficient [r k]_q. Values of q within 1e-12 of 1 use the
/// ordinary binomial coefficient.
cplx q_binomial(int r, int k, cplx q);

/// (x;q)_inf for |q| < 1. Arguments with |x| > 1 are reduced through
/// pochhammer_decompose; the magnitude is tracked in log form throughout.
Polar q_pochhammer_inf_polar(cplx x, cplx q, const Tolerances& tol = {});
cplx q_pochhammer_inf(cplx x, cplx q, const Tolerances& tol = {});

/// Scaling of |x| > 1 into the unit disk: h(x) = (-1)^m head h(a) h_m(b)
/// with m the unique integer satisfying |q|^m |x| <= 1 < |q|^{m-1} |x|.
struct PochhammerDecomposition {
  int m = 0;
  cplx head_factor;          // x^m q^{m(m-1)/2}
  double log_abs_head = 0.0; // log |head_factor|, finite even when head overflows
  cplx a;                    // q^m x, |a| <= 1
  cplx b;                    // q^{1-m} / x, |q| <= |b| < 1
  double rho = 0.0;          // m - log|x| / log|q|^{-1}, in [0, 1)
};

PochhammerDecomposition pochhammer_decompose(cplx x, cplx q);

/// Exponent 1/2 + log|x| / (2 log q^{-1}) governing the growth of (x;q)_inf.
double pochhammer_growth_exponent(double abs_x, double q);

/// C_q |x|^{growth exponent} with C_q = q^{-1/8} (-1;q)_inf^2.
double pochhammer_upper_bound(cplx x, double q);
double log_pochhammer_upper_bound(cplx x, double q);

/// Membership in the closed set obtained by removing the open disks of
/// radius rho q^{-j} around every q^{-j}, j >= 0. The set is invariant under
/// multiplication by q and avoids every zero of (x;q)_inf.
bool set_A_membership(cplx x, double q, double rho);

/// |(x;q)_inf| / |x|^{growth exponent}; bounded below on the sets above
/// once a neighbourhood of the origin is removed.
double pochhammer_lower_ratio(cplx x, double q);
double log_pochhammer_lower_ratio(cplx x, double q);

}  // namespace awt
