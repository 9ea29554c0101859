#pragma once

// The binomial theorem for pairs of P-sequences and its five canonical
// specializations, in floating point and in exact rational arithmetic.

#include <string>
#include <utility>

#include "awtaylor/psequence.hpp"
#include "awtaylor/qcore.hpp"
#include "awtaylor/qseries.hpp"

namespace awt {

constexpr double kBinomialThreshold = 1e-11;
constexpr int kExactCap = 12;

/// prod_{k<n} (x - z_k) against
/// sum_k [n k]_{lambda^2} lambda^{-k(n-k)} prod_{j<k} (x - y_j) prod_{j<n-k} (y_{k/2} - z_{j+k/2}).
/// Both sequences must share the same polynomial P.
VerificationReport general_binomial_check(const PSequence& y, const PSequence& z, cplx x, int n,
                                          const VerifyOptions& o = {});

/// Parameters of one Table II row. Row C and A use x, y, z; row Q uses
/// u, v, w; row G uses x, y, z, q; row T uses u, v, w, q.
template <class T>
struct RowArgs {
  T x{0}, y{0}, z{0};
  T u{0}, v{0}, w{0};
  T q{0};
};

template <class T>
std::pair<T, T> table2_sides(FormTag row, const RowArgs<T>& a, int n) {
  if (n < 0) throw DomainError("table2: n must be nonnegative");
  T lhs(0), rhs(0);
  const auto pow = [](const T& b, int e) {
    T r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  switch (row) {
    case FormTag::C:
      lhs = pow(a.x - a.z, n);
      for (int k = 0; k <= n; ++k)
        rhs += q_binomial_generic<T>(n, k, T(1)) * pow(a.x - a.y, k) * pow(a.y - a.z, n - k);
      break;
    case FormTag::A:
      lhs = generalized_binomial<T>(a.x - a.z, n);
      for (int k = 0; k <= n; ++k)
        rhs += generalized_binomial<T>(a.x - a.y, k) * generalized_binomial<T>(a.y - a.z, n - k);
      break;
    case FormTag::Q:
      lhs = rising_factorial<T>(a.u + a.w, n) * generalized_binomial<T>(a.u - a.w, n);
      for (int k = 0; k <= n; ++k)
        rhs += generalized_binomial<T>(a.u - a.v, k) * rising_factorial<T>(a.u + a.v, k) *
               generalized_binomial<T>(a.v - a.w, n - k) * rising_factorial<T>(a.v + a.w + T(k), n - k);
      break;
    case FormTag::G:
      lhs = T(1);
      for (int k = 0; k < n; ++k) lhs *= a.x - pow(a.q, k) * a.z;
      for (int k = 0; k <= n; ++k) {
        T term = q_binomial_generic<T>(n, k, a.q);
        for (int j = 0; j < k; ++j) term *= a.x - pow(a.q, j) * a.y;
        for (int j = 0; j < n - k; ++j) term *= a.y - pow(a.q, j) * a.z;
        rhs += term;
      }
      break;
    case FormTag::T: {
      const auto qq = [&](int m) { return q_pochhammer<T>(a.q, a.q, m); };
      lhs = q_pochhammer<T>(a.w * a.u, a.q, n) * q_pochhammer<T>(a.w / a.u, a.q, n) / qq(n);
      for (int k = 0; k <= n; ++k)
        rhs += q_pochhammer<T>(a.v * a.u, a.q, k) * q_pochhammer<T>(a.v / a.u, a.q, k) / qq(k) *
               q_pochhammer<T>(a.w * a.v * pow(a.q, k), a.q, n - k) * q_pochhammer<T>(a.w / a.v, a.q, n - k) /
               qq(n - k) * pow(a.w / a.v, k);
      break;
    }
  }
  return {lhs, rhs};
}

VerificationReport table2_check(FormTag row, const RowArgs<cplx>& args, int n, const VerifyOptions& o = {});

struct ExactResidual {
  bool zero = false;
  std::string residual;  // LHS - RHS as an exact fraction
};

/// The row identity in rational arithmetic; every double argument is
/// converted exactly (doubles are dyadic rationals).
ExactResidual table2_exact(FormTag row, const RowArgs<double>& args, int n);

/// Row G rewritten as x^n (y/x)^n (z/y;q)_n 2phi1[q^{-n}, y/x; q^{1-n} y/z; q, q x/z].
cplx table2_g_hypergeometric(cplx x, cplx y, cplx z, cplx q, int n, const Tolerances& tol = {});

/// Row T right side as (wv, w/v;q)_n/(q;q)_n 3phi2[q^{-n}, vu, v/u; wv, q^{1-n} v/w; q, q].
cplx table2_t_hypergeometric(cplx u, cplx v, cplx w, cplx q, int n, const Tolerances& tol = {});

/// d_k of y -> Phi_n(x, y) at w, on the sequence through w, against
/// prod_{j<k} bracket(n-j)/bracket(k-j) Phi_{n-k}(x, w).
VerificationReport phi_partial_identity_check(int n, int k, const PSequence& seq, cplx w,
                                              const VerifyOptions& o = {});

}  // namespace awt
