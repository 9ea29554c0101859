#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "awtaylor/awop.hpp"
#include "awtaylor/quadrature.hpp"

using namespace awt;

namespace {
AnalyticFunction fn(ComplexFn g, Domain d = Entire{}) {
  AnalyticFunction f;
  f.eval = std::move(g);
  f.domain = d;
  return f;
}
const AnalyticFunction ident = fn([](cplx y) { return y; });
const AnalyticFunction square = fn([](cplx y) { return y * y; });
const AnalyticFunction cube = fn([](cplx y) { return y * y * y; });
const AnalyticFunction constant = fn([](cplx) { return cplx(2.5, -1.0); });
const AnalyticFunction exp_fn = fn([](cplx y) { return std::exp(y); });
}  // namespace

TEST_CASE("circle quadrature") {
  const QuadratureResult r = circle_integral([](cplx y) { return 1.0 / y; }, 0.0, 2.0);
  CHECK(std::abs(r.value - 1.0) < 1e-15);
  const QuadratureResult s = circle_integral([](cplx y) { return std::exp(y) / (y * y * y); }, 0.0, 1.0);
  CHECK(std::abs(s.value - 0.5) < 1e-14);
}

TEST_CASE("axis quadrature") {
  // (1/2pi) int 1/(1+t^2) dt over R = 1/2; g(it) = 1/(1 - (it)^2)
  const QuadratureResult r = axis_integral([](cplx y) { return 1.0 / (1.0 - y * y); }, 1e6);
  CHECK(std::abs(r.value - 0.5) < 1e-6);
}

TEST_CASE("quadrature is bitwise identical in parallel and serial") {
  const ComplexFn g = [](cplx y) { return std::exp(y) / (y - cplx(0.2, 0.1)); };
  const cplx a = circle_integral(g, 0.0, 1.5, {}, Exec::serial).value;
  const cplx b = circle_integral(g, 0.0, 1.5, {}, Exec::parallel).value;
  CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  const ComplexFn h = [](cplx y) { return 1.0 / (2.0 - y) / (3.0 - y); };
  const cplx c = axis_integral(h, 500.0, {}, Exec::serial).value;
  const cplx d = axis_integral(h, 500.0, {}, Exec::parallel).value;
  CHECK(std::memcmp(&c, &d, sizeof c) == 0);
}

TEST_CASE("domains") {
  CHECK(domain_contains(Disk{0.0, 1.0}, 0.5));
  CHECK_FALSE(domain_contains(Disk{0.0, 1.0}, 1.0));
  CHECK(domain_contains(LeftHalfPlane{1.0}, cplx(0.9, 50.0)));
  CHECK_FALSE(domain_contains(RightHalfPlane{0.0}, -0.1));
  const AnalyticFunction f = fn([](cplx y) { return 1.0 / (1.0 - y); }, Disk{0.0, 1.0});
  CHECK_THROWS_AS(f(2.0), DomainError);
}

TEST_CASE("two-point divided difference") {
  CHECK(std::abs(divided_difference(ident, 0.3, 1.7) - 1.0) < 1e-15);
  CHECK(std::abs(divided_difference(ident, 0.3, 0.3) - 1.0) < 1e-12);
  CHECK(std::abs(divided_difference(constant, 0.3, 1.7)) < 1e-15);
  CHECK(std::abs(divided_difference(square, 1.0, 2.0) - 3.0) < 1e-15);
  // merged points fall back to the contour form: the derivative
  CHECK(std::abs(divided_difference(exp_fn, 0.4, 0.4 + 1e-12) - std::exp(0.4)) < 1e-10);
}

TEST_CASE("Askey-Wilson operator") {
  const QuadraticSymmetricPolynomial P = CanonicalForm::trigonometric(std::sqrt(0.5), 1.3).polynomial();
  const cplx x(0.2, 0.4);
  CHECK(std::abs(aw_apply(P, constant, x)) < 1e-14);
  CHECK(std::abs(aw_apply(P, square, x) - 2.0 * P.A(x)) < 1e-13);
  // continuous form: D is the derivative
  const QuadraticSymmetricPolynomial C = CanonicalForm::continuous(0.0).polynomial();
  CHECK(std::abs(aw_apply(C, exp_fn, x) - std::exp(x)) < 1e-12);
  CHECK(std::abs(aw_iterate(C, cube, x, 2) - 6.0 * x) < 1e-9);
  CHECK(aw_iterate(P, exp_fn, x, 0) == std::exp(x));
  CHECK(std::abs(aw_iterate(P, square, x, 3)) < 1e-10);
  CHECK_THROWS_AS(aw_iterate(P, exp_fn, x, 13), DomainError);
}

TEST_CASE("normalized divided differences") {
  const PSequence s(CanonicalForm::geometric(std::sqrt(0.5), 0.8));
  CHECK(std::abs(partial_k_contour(exp_fn, s, 0) - std::exp(0.8)) < 1e-14);
  CHECK(std::abs(partial_k_contour(square, s, 3)) < 1e-14);
  const AnalyticFunction y4 = fn([](cplx y) { return y * y * y * y; });
  CHECK(std::abs(partial_k_contour(y4, s, 4) - 1.0) < 1e-13);
  CHECK(std::abs(partial_k_residues(ident, {0.0, 1.0}, 1) - 1.0) < 1e-15);
  CHECK(partial_k_residues(exp_fn, {0.7}, 0) == std::exp(cplx(0.7)));
  CHECK_THROWS_AS(partial_k_residues(exp_fn, {0.7, 0.7}, 1), DomainError);
  // contour vs residues on the sequence nodes
  for (int k = 0; k <= 6; ++k) {
    const cplx a = partial_k_contour(exp_fn, s, k);
    const cplx b = partial_k_residues(exp_fn, symmetric_nodes(s, k), k);
    CHECK(std::abs(a - b) < 1e-11);
  }
}

TEST_CASE("D^k is the bracket product times d_k") {
  const cplx l = std::sqrt(0.5);
  CHECK(dk_coefficient(0, l) == cplx(1.0));
  CHECK(dk_coefficient(1, l) == cplx(1.0));
  CHECK(std::abs(dk_coefficient(5, 1.0) - 120.0) < 1e-12);
  for (const PSequence& s : {PSequence(CanonicalForm::geometric(l, 0.6)), PSequence(CanonicalForm::arithmetic(0.1))}) {
    for (int k = 0; k <= 5; ++k) {
      const cplx a = aw_iterate(s.polynomial(), exp_fn, s.base_point(), k);
      const cplx b = dk_coefficient(k, s.lambda()) * partial_k_contour(exp_fn, s, k);
      CHECK(std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("contours") {
  CHECK_THROWS_AS(circle_contour(0.0, -1.0).validate(), DomainError);
  const Contour c = auto_contour(Disk{0.0, 2.0}, {0.5, cplx(0.0, 1.0)});
  const Circle& circ = std::get<Circle>(c.kind);
  CHECK(circ.radius > 1.0);
  CHECK(circ.radius < 2.0);
  CHECK_THROWS_AS(auto_contour(Disk{0.0, 1.0}, {1.5}), DomainError);
  const AnalyticFunction f = fn([](cplx y) { return 1.0 / (3.0 - y); }, Disk{0.0, 3.0});
  CHECK_THROWS_AS(partial_on_nodes(f, {0.0, 0.5}, circle_contour(0.0, 4.0)), DomainError);
  CHECK_THROWS_AS(partial_on_nodes(f, {0.0, 2.5}, circle_contour(0.0, 2.0)), DomainError);
}
