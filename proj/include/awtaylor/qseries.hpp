#pragma once

// Basic hypergeometric series and the summation formulas verified against
// Taylor expansions in the geometric and trigonometric canonical forms.

#include <optional>
#include <vector>

#include "awtaylor/qcore.hpp"
#include "awtaylor/report.hpp"
#include "awtaylor/taylor.hpp"

namespace awt {

struct BasicHypergeometricSpec {
  std::vector<cplx> upper;
  std::vector<cplx> lower;
  cplx q{0.5, 0.0};
  cplx z{0.0, 0.0};
};

struct SeriesValue {
  cplx value{0.0, 0.0};
  int terms = 0;
  bool terminated = false;
};

/// sum_k prod (a_i;q)_k / prod (b_j;q)_k z^k / (q;q)_k via the term ratio
/// (no (-1)^k q^{k(k-1)/2} balancing factor, which only matters when the
/// upper list is not one longer than the lower one).
SeriesValue phi_series(const BasicHypergeometricSpec& spec, const Tolerances& tol = {});

constexpr double kSeriesThreshold = 1e-9;
constexpr double kIntegralThreshold = 1e-5;

struct VerifyOptions {
  Tolerances tol{};
  std::optional<double> threshold;  // default depends on the formula
  AxisOptions axis{};
  Exec exec = Exec::parallel;
};

/// 2phi1[xi/x, alpha/beta; alpha xi; q, beta x] against
/// (alpha x, beta xi; q)_inf / (beta x, alpha xi; q)_inf.
VerificationReport verify_q_gauss(cplx alpha, cplx beta, cplx xi, cplx x, cplx q, const VerifyOptions& o = {});

/// prod_{j<k} (beta - q^j alpha)/(1 - q^{j+1}) (alpha z q^{k/2};q)_inf / (beta z q^{-k/2};q)_inf.
cplx geometric_partial_k(cplx alpha, cplx beta, cplx z, cplx q, int k, const Tolerances& tol = {});

/// The inverse Joukowski map y -> v with y = (v + 1/v)/2 and |v| >= 1.
cplx joukowski_inverse(cplx y);

/// (gamma v, gamma/v; q)_inf in polar form.
Polar f_gamma(cplx v, double gamma, double q, const Tolerances& tol = {});

/// (alpha u, alpha/u; q)_inf / (beta u, beta/u; q)_inf.
cplx f_alpha_beta(cplx u, double alpha, double beta, double q, const Tolerances& tol = {});

/// f_alpha_beta as a function of x = (u + 1/u)/2; analytic for Re x < 1.
AnalyticFunction trig_function(double alpha, double beta, double q, const Tolerances& tol = {});

/// (2 beta)^k (alpha/beta;q)_k / (q, alpha xi, beta/(q^k xi); q)_k f_alpha_beta(xi):
/// d_k f at z_{k/2} on the nodes z_0..z_k of trig_sequence(xi, q), i.e. the
/// k-th Taylor coefficient.
cplx trig_partial_k(double alpha, double beta, double xi, double q, int k, const Tolerances& tol = {});

/// (alpha xi, alpha/xi; q)_inf / (beta xi, beta/xi; q)_inf
///   3phi2[alpha/beta, xi u, xi/u; alpha xi, q xi/beta; q, q].
SeriesValue s_infinity_trig(double alpha, double beta, double xi, cplx u, double q, const Tolerances& tol = {});

/// The trigonometric sequence z_t = (q^t xi + q^{-t}/xi)/2.
PSequence trig_sequence(double xi, double q);

/// f_alpha_beta(u) against S_inf + the integral remainder along the
/// imaginary axis.
VerificationReport verify_new_formula(double alpha, double beta, double xi, cplx u, double q,
                                      const VerifyOptions& o = {});

/// The two-term non-terminating 3phi2 sum (pure series).
VerificationReport verify_nonterminating_q_saalschutz(cplx alpha, cplx beta, cplx xi, cplx u, cplx q,
                                                      const VerifyOptions& o = {});

/// (alpha x;q)_inf/(beta x;q)_inf against the 2phi1 term plus the integral
/// remainder on the sequence z_t = q^{-t} xi.
VerificationReport verify_q_vandermonde_nonsym(double alpha, double beta, double xi, cplx x, double q,
                                               const VerifyOptions& o = {});

}  // namespace awt
