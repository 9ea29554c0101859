#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "awtaylor/bounds.hpp"
#include "awtaylor/qcore.hpp"

using namespace awt;
using doctest::Approx;

TEST_CASE("finite q-shifted factorial") {
  CHECK(q_pochhammer(cplx(0.3), cplx(0.5), 0) == cplx(1.0));
  CHECK(q_pochhammer(cplx(0.0), cplx(0.5), 7) == cplx(1.0));
  CHECK(std::abs(q_pochhammer(cplx(0.5), cplx(0.5), 2) - 0.375) < 1e-16);
}

TEST_CASE("infinite product") {
  CHECK(q_pochhammer_inf(0.0, 0.7) == cplx(1.0));
  CHECK(std::abs(q_pochhammer_inf(1.0, 0.7)) == 0.0);
  // direct truncated product
  double direct = 1.0;
  for (int j = 1; j < 200; ++j) direct *= 1.0 - std::pow(0.5, j);
  CHECK(std::abs(q_pochhammer_inf(0.5, 0.5) - direct) < 1e-15);

  // (x;q)_inf = (x;q)_n (q^n x;q)_inf, including |x| > 1 via the decomposition
  for (cplx x : {cplx(0.4, 0.2), cplx(-3.0, 1.0), cplx(25.0, -7.0)}) {
    const cplx q(0.6, 0.1);
    const cplx lhs = q_pochhammer_inf(x, q);
    const cplx rhs = q_pochhammer(x, q, 5) * q_pochhammer_inf(x * std::pow(q, 5), q);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("polar form survives overflow") {
  // |(x;q)_inf| for huge x overflows a double but its log does not
  const Polar p = q_pochhammer_inf_polar(1e200, 0.5);
  CHECK(std::isfinite(p.log_abs));
  CHECK(p.log_abs > 700.0);
  CHECK(q_pochhammer_inf_polar(1.0, 0.5).is_zero());
}

TEST_CASE("rising factorial and q-binomial") {
  CHECK(rising_factorial(cplx(3.0), 0) == cplx(1.0));
  CHECK(rising_factorial(cplx(1.0), 4) == cplx(24.0));
  CHECK(rising_factorial(cplx(0.5), 2) == cplx(0.75));
  const cplx q(0.3, 0.2);
  CHECK(q_binomial(5, 0, q) == cplx(1.0));
  CHECK(std::abs(q_binomial(2, 1, q) - (1.0 + q)) < 1e-15);
  CHECK(std::abs(q_binomial(7, 3, 1.0) - 35.0) < 1e-12);
  CHECK(std::abs(q_binomial(7, 3, q) - q_binomial(7, 4, q)) < 1e-14);
  // Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]
  CHECK(std::abs(q_binomial(8, 3, q) - (q_binomial(7, 2, q) + std::pow(q, 3) * q_binomial(7, 3, q))) < 1e-13);
  CHECK_THROWS_AS(q_binomial(3, 4, q), DomainError);
}

TEST_CASE("decomposition of |x| > 1") {
  const auto d = pochhammer_decompose(2.0, 0.5);
  CHECK(d.m == 1);
  CHECK(std::abs(d.a - 1.0) < 1e-15);
  CHECK(std::abs(d.b - 0.5) < 1e-15);  // b = q^{1-m}/x = q at the boundary
  CHECK(pochhammer_decompose(10.0, 0.5).m == 4);
  const auto e = pochhammer_decompose(cplx(13.0, 4.0), 0.3);
  CHECK(std::abs(e.a) <= 1.0);
  CHECK(std::abs(e.b) < 1.0);
  CHECK(std::abs(e.b) >= 0.3 - 1e-15);
  CHECK(e.rho >= 0.0);
  CHECK(e.rho < 1.0);
}

TEST_CASE("excluded-disk set") {
  CHECK(set_A_membership(-5.0, 0.5, 0.3));
  CHECK_FALSE(set_A_membership(1.0, 0.5, 0.3));
  CHECK_FALSE(set_A_membership(std::pow(0.5, -3) * 1.15, 0.5, 0.3));
}

TEST_CASE("growth bounds hold on a small sweep") {
  CHECK(pochhammer_growth_exponent(1.0, 0.5) == Approx(0.5));
  for (double q : {0.3, 0.7}) {
    const UpperBoundSweep s = sweep_upper_bound(q, 500, 6.0, 3, Exec::serial);
    CHECK(s.violations == 0);
  }
}

TEST_CASE("sweeps are identical in parallel and serial") {
  const UpperBoundSweep a = sweep_upper_bound(0.5, 2000, 10.0, 9, Exec::serial);
  const UpperBoundSweep b = sweep_upper_bound(0.5, 2000, 10.0, 9, Exec::parallel);
  CHECK(a.worst_log_margin == b.worst_log_margin);
  const LowerRatioSweep c = sweep_lower_ratio(0.5, 0.3, 0.1, {10.0, 100.0}, 600, 9, Exec::serial);
  const LowerRatioSweep d = sweep_lower_ratio(0.5, 0.3, 0.1, {10.0, 100.0}, 600, 9, Exec::parallel);
  CHECK(c.overall_infimum == d.overall_infimum);
  CHECK(c.spread == d.spread);
}

TEST_CASE("tolerances") {
  Tolerances t;
  CHECK_FALSE(t.validate().has_value());
  t.series_tol = 1e-6;
  CHECK(t.validate().has_value());
  t.max_terms = 0;
  CHECK_THROWS_AS(t.validate(), DomainError);
}
