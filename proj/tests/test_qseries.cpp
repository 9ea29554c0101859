#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awtaylor/qseries.hpp"
#include "awtaylor/taylor.hpp"

using namespace awt;

TEST_CASE("basic hypergeometric series") {
  CHECK(phi_series({{0.3, 0.4}, {0.9}, 0.5, 0.0}).value == cplx(1.0));
  const SeriesValue t = phi_series({{1.0, 0.4}, {0.9}, 0.5, 0.7});
  CHECK(t.value == cplx(1.0));
  CHECK(t.terminated);
  // q-binomial theorem: 1phi0(a;;q,z) = (az;q)_inf/(z;q)_inf
  const cplx a(0.3, 0.2), z(0.4, -0.1), q(0.6, 0.0);
  CHECK(std::abs(phi_series({{a}, {}, q, z}).value - q_pochhammer_inf(a * z, q) / q_pochhammer_inf(z, q)) < 1e-14);
  // terminating q-Chu-Vandermonde: 2phi1(q^-n, b; c; q, q) = (c/b;q)_n b^n / (c;q)_n
  const int n = 5;
  const cplx b(0.7), c(0.2, 0.3);
  const cplx lhs = phi_series({{std::pow(q, -n), b}, {c}, q, q}).value;
  CHECK(std::abs(lhs - q_pochhammer(c / b, q, n) * std::pow(b, n) / q_pochhammer(c, q, n)) < 1e-12);
  CHECK_THROWS_AS(phi_series({{0.3}, {}, 1.2, 0.1}), DomainError);
  CHECK_THROWS_AS(phi_series({{0.3}, {}, 0.5, 1.5}), DomainError);
  CHECK_THROWS_AS(phi_series({{0.3}, {4.0}, 0.5, 0.5}), DomainError);  // 1 - q^2 b = 0
}

TEST_CASE("q-Gauss") {
  const VerificationReport r = verify_q_gauss(0.3, 0.7, -0.2, 0.4, 0.5);
  CHECK(r.pass);
  CHECK(r.rel_error < 1e-10);
  CHECK(std::abs(verify_q_gauss(0.4, 0.4, -0.2, 0.5, 0.5).lhs - 1.0) < 1e-15);
  CHECK(std::abs(verify_q_gauss(0.3, 0.7, 0.4, 0.4, 0.5).lhs - 1.0) < 1e-15);
  CHECK_THROWS_AS(verify_q_gauss(0.3, 0.7, -0.2, 0.4, 1.1), DomainError);
}

TEST_CASE("geometric d_k") {
  const cplx f0 = q_pochhammer_inf(0.3 * 0.4, 0.5) / q_pochhammer_inf(0.7 * 0.4, 0.5);
  CHECK(std::abs(geometric_partial_k(0.3, 0.7, 0.4, 0.5, 0) - f0) < 1e-15);
  CHECK(std::abs(geometric_partial_k(0.5, 0.5, 0.4, 0.5, 3)) == 0.0);
}

TEST_CASE("trigonometric case") {
  const double alpha = 0.2, beta = 0.6, q = 0.5, xi = -1.5;
  CHECK(std::abs(joukowski_inverse(0.5 * (3.0 + 1.0 / 3.0)) - 3.0) < 1e-14);
  CHECK(std::abs(joukowski_inverse(cplx(0.3, 0.8))) >= 1.0);
  CHECK(std::abs(f_alpha_beta(2.0, 0.4, 0.4, q) - 1.0) < 1e-15);
  CHECK(std::abs(trig_partial_k(alpha, beta, xi, q, 0) - f_alpha_beta(xi, alpha, beta, q)) < 1e-15);
  CHECK(std::abs(trig_partial_k(0.4, 0.4, xi, q, 2)) == 0.0);
  // closed-form d_k against the contour rule
  const AnalyticFunction f = trig_function(alpha, beta, q);
  const PSequence s = trig_sequence(xi, q);
  for (int k = 0; k <= 4; ++k) {
    // the closed form is centred at z_{k/2} of the sequence through xi
    CHECK(std::abs(partial_k_contour(f, s.rebased(k), k) - trig_partial_k(alpha, beta, xi, q, k)) < 1e-12);
    const double shifted = xi * std::pow(q, -0.5 * k);
    CHECK(std::abs(partial_k_contour(f, s, k) - trig_partial_k(alpha, beta, shifted, q, k)) < 1e-12);
  }
  CHECK(std::abs(s_infinity_trig(0.4, 0.4, xi, -2.0, q).value - 1.0) < 1e-15);
}

TEST_CASE("new formula with the imaginary-axis integral") {
  const VerificationReport r = verify_new_formula(0.2, 0.6, -1.5, -2.0, 0.5);
  CHECK(r.pass);
  CHECK(r.abs_error < 1e-5);
  CHECK(r.diagnostics.quadrature_nodes > 0);
  CHECK(r.diagnostics.truncation_T > 0.0);
  const VerificationReport t = verify_new_formula(0.4, 0.4, -1.5, -2.0, 0.5);
  CHECK(t.pass);
  CHECK(std::abs(t.lhs - 1.0) < 1e-15);
  CHECK_THROWS_AS(verify_new_formula(0.2, 0.6, 1.5, -2.0, 0.5), DomainError);
  CHECK_THROWS_AS(verify_new_formula(0.2, 0.6, -1.5, 2.0, 0.5), DomainError);
}

TEST_CASE("non-terminating q-Saalschutz") {
  const VerificationReport r = verify_nonterminating_q_saalschutz(0.15, 0.5, -1.2, -1.7, 0.4);
  CHECK(r.pass);
  CHECK(r.rel_error < 1e-9);
  CHECK(verify_nonterminating_q_saalschutz(0.3, 0.3, -1.2, -1.7, 0.4).pass);
}

TEST_CASE("q-Vandermonde remark") {
  const VerificationReport r = verify_q_vandermonde_nonsym(0.3, 0.8, -1.0, -0.5, 0.5);
  CHECK(r.pass);
  CHECK(r.abs_error < 1e-5);
  const VerificationReport e = verify_q_vandermonde_nonsym(0.5, 0.5, -1.0, -0.5, 0.5);
  CHECK(e.pass);
  CHECK(std::abs(e.rhs - 1.0) < 1e-8);
}

TEST_CASE("verifiers give identical reports in parallel and serial") {
  VerifyOptions a, b;
  a.exec = Exec::serial;
  b.exec = Exec::parallel;
  const VerificationReport r = verify_new_formula(0.2, 0.6, -1.5, -2.0, 0.5, a);
  const VerificationReport s = verify_new_formula(0.2, 0.6, -1.5, -2.0, 0.5, b);
  CHECK(r.rhs == s.rhs);
  CHECK(to_json_line(r) == to_json_line(s));
}
