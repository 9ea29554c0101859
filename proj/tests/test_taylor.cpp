#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "awtaylor/qseries.hpp"
#include "awtaylor/taylor.hpp"

using namespace awt;

namespace {
AnalyticFunction fn(ComplexFn g, Domain d = Entire{}) {
  AnalyticFunction f;
  f.eval = std::move(g);
  f.domain = d;
  return f;
}
const AnalyticFunction exp_fn = fn([](cplx y) { return std::exp(y); });
const cplx lam = std::sqrt(cplx(0.5, 0.0));
}  // namespace

TEST_CASE("classical Taylor series on the continuous form") {
  const TaylorExpansion e = taylor_coefficients(exp_fn, PSequence(CanonicalForm::continuous(0.0)), 15);
  double fact = 1.0;
  for (int k = 0; k <= 15; ++k) {
    if (k) fact *= k;
    CHECK(std::abs(e.coefficients[k] - 1.0 / fact) < 1e-14);
  }
}

TEST_CASE("constants and trivial evaluations") {
  const AnalyticFunction c = fn([](cplx) { return cplx(3.0, 1.0); });
  const PSequence s(CanonicalForm::trigonometric(lam, 1.5));
  const TaylorExpansion e = taylor_coefficients(c, s, 6);
  CHECK(std::abs(e.coefficients[0] - cplx(3.0, 1.0)) < 1e-14);
  for (int k = 1; k <= 6; ++k) CHECK(std::abs(e.coefficients[k]) < 1e-13);
  const TaylorExpansion g = taylor_coefficients(exp_fn, s, 5);
  CHECK(taylor_eval(g, s.at(0)) == g.coefficients[0]);
  CHECK(std::abs(remainder_contour(exp_fn, s, 5, s.at(0))) < 1e-15);
}

TEST_CASE("geometric coefficients match the closed form") {
  const double alpha = 0.3, beta = 0.7, q = 0.5, xi = 0.4;
  const AnalyticFunction f = fn(
      [=](cplx y) { return q_pochhammer_inf(alpha * y, q) / q_pochhammer_inf(beta * y, q); }, Disk{0.0, 1.0 / beta});
  const PSequence s(CanonicalForm::geometric(std::sqrt(q), xi));
  const TaylorExpansion e = taylor_coefficients(f, s, 8);
  for (int k = 0; k <= 8; ++k) {
    const cplx closed = geometric_partial_k(alpha, beta, xi * std::pow(q, 0.5 * k), q, k);
    CHECK(std::abs(e.coefficients[k] - closed) < 1e-12);
  }
}

TEST_CASE("f = S_n f + R_n f on every canonical form") {
  const AnalyticFunction f =
      fn([](cplx y) { return 1.0 / (y - cplx(300.0, 100.0)) + 2.0 / (y + 400.0); }, Disk{0.0, 316.0});
  for (const CanonicalForm& form :
       {CanonicalForm::trigonometric(std::sqrt(0.8), 1.2), CanonicalForm::geometric(std::sqrt(0.8), 0.9),
        CanonicalForm::quadratic(0.4), CanonicalForm::arithmetic(-0.3), CanonicalForm::continuous(0.5)}) {
    const PSequence s(form);
    for (int n : {0, 3, 7}) {
      const TaylorExpansion e = taylor_coefficients(f, s, n);
      const cplx x(1.1, -0.7);
      const cplx r = remainder_contour(f, s, n, x);
      CHECK(std::abs(f(x) - taylor_eval(e, x) - r) < 1e-13);
    }
  }
}

TEST_CASE("polynomials are reproduced exactly") {
  const AnalyticFunction p = fn([](cplx y) { return 1.0 + y * (2.0 - y * (0.5 - y)); });
  const PSequence s(CanonicalForm::quadratic(0.25));
  const cplx x(2.0, 1.0);
  for (int n = 3; n <= 5; ++n) {
    CHECK(std::abs(remainder_contour(p, s, n, x)) < 1e-10);
    CHECK(std::abs(taylor_eval(taylor_coefficients(p, s, n), x) - p(x)) < 1e-10);
  }
}

TEST_CASE("automatic method agrees with the contour rule") {
  const PSequence s(CanonicalForm::geometric(lam, 0.6));
  const TaylorExpansion a = taylor_coefficients(exp_fn, s, 10, CoefficientMethod::contour);
  const TaylorExpansion b = taylor_coefficients(exp_fn, s, 10, CoefficientMethod::automatic);
  // the residue sum loses digits on geometric nodes as k grows
  const TaylorExpansion c = taylor_coefficients(exp_fn, s, 4, CoefficientMethod::residues);
  for (int k = 0; k <= 10; ++k) CHECK(std::abs(a.coefficients[k] - b.coefficients[k]) < 1e-10);
  for (int k = 0; k <= 4; ++k) CHECK(std::abs(a.coefficients[k] - c.coefficients[k]) < 1e-10);
}

TEST_CASE("coefficients are bitwise identical in parallel and serial") {
  const PSequence s(CanonicalForm::trigonometric(lam, 1.7));
  const TaylorExpansion a = taylor_coefficients(exp_fn, s, 8, CoefficientMethod::contour, std::nullopt, Exec::serial);
  const TaylorExpansion b = taylor_coefficients(exp_fn, s, 8, CoefficientMethod::contour, std::nullopt, Exec::parallel);
  CHECK(std::memcmp(a.coefficients.data(), b.coefficients.data(), sizeof(cplx) * a.coefficients.size()) == 0);
}

TEST_CASE("remainder bound") {
  CHECK_THROWS_AS(remainder_bound(2.0, 1.0, 1.0, 0.5, 3), DomainError);
  CHECK(remainder_bound(6.0, 1.0, 1.0, 0.1, 0) == doctest::Approx(6.0 / 5.0 * 1.1 / 5.9));
  // the measured remainder sits under the bound
  const PSequence s(CanonicalForm::geometric(lam, 0.1));
  const double M = std::exp(6.0);
  for (int n : {5, 10, 20}) {
    const double r = std::abs(remainder_contour(exp_fn, s, n, 1.0, circle_contour(0.0, 6.0)));
    CHECK(r <= remainder_bound(6.0, M, 1.0, 0.1, n));
  }
}

TEST_CASE("entire product H") {
  const double q = 0.5, xi = -1.3;
  const PSequence s(CanonicalForm::geometric(1.0 / std::sqrt(q), xi));  // z_j = xi q^-j
  CHECK(summability_ratio(s) == doctest::Approx(1.0 / q));
  CHECK(std::abs(h_product(s, xi)) < 1e-15);
  CHECK(std::abs(h_product(s, 0.0) - 1.0) < 1e-15);
  for (cplx x : {cplx(0.4, 0.1), cplx(-5.0, 3.0), cplx(40.0, 0.0)}) {
    const cplx h = h_product(s, x);
    const cplx direct = q_pochhammer_inf(x / xi, q);
    CHECK(std::abs(h - direct) < 1e-12 * std::max(1.0, std::abs(direct)));
  }
  // arithmetic nodes grow too slowly for the product to converge
  CHECK_THROWS_AS(h_product(PSequence(CanonicalForm::arithmetic(0.5)), 1.0), DomainError);
}

TEST_CASE("infinite-order remainder rejects bad geometry") {
  const PSequence s(CanonicalForm::geometric(1.0 / std::sqrt(0.5), -1.0));
  CHECK_THROWS_AS(remainder_infinite(exp_fn, s, 0.5, HalfPlane::right), DomainError);
  CHECK_THROWS_AS(remainder_infinite(exp_fn, s, 0.5, HalfPlane::left), DomainError);
}

TEST_CASE("Taylor limit equals the closed-form 3phi2") {
  const double alpha = 0.2, beta = 0.6, q = 0.5, xi = -1.5;
  const cplx u = -2.0;
  const SeriesValue closed = s_infinity_trig(alpha, beta, xi, u, q);
  const TaylorLimit lim = taylor_limit(trig_function(alpha, beta, q), trig_sequence(xi, q), 0.5 * (u + 1.0 / u));
  CHECK(std::abs(lim.value - closed.value) < 1e-12);
}
