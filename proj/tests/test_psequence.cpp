#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awtaylor/psequence.hpp"

using namespace awt;

namespace {
const cplx lam = std::sqrt(cplx(0.6, 0.0));

std::vector<CanonicalForm> forms() {
  return {CanonicalForm::trigonometric(lam, cplx(1.4, 0.3)), CanonicalForm::geometric(lam, cplx(0.7, -0.2)),
          CanonicalForm::quadratic(cplx(0.3, 0.1)), CanonicalForm::arithmetic(cplx(-0.4, 0.5)),
          CanonicalForm::continuous(cplx(0.2, 0.0))};
}
}  // namespace

TEST_CASE("canonical values") {
  CHECK(std::abs(CanonicalForm::geometric(std::sqrt(0.5), 1.0).value(6) - 0.125) < 1e-15);
  CHECK(CanonicalForm::continuous(2.5).value(17) == cplx(2.5));
  CHECK(CanonicalForm::quadratic(2.0).value(2) == cplx(9.0));
}

TEST_CASE("every canonical sequence factors its polynomial") {
  for (const CanonicalForm& f : forms()) {
    const QuadraticSymmetricPolynomial P = f.polynomial();
    for (long h = -6; h <= 6; ++h) {
      const cplx x = f.value(h);
      const double scale = 1.0 + std::norm(x) + std::norm(f.value(h + 1));
      CHECK(std::abs(P(x, f.value(h + 1))) <= 1e-12 * scale);
      CHECK(std::abs(P(x, f.value(h - 1))) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("recurrence matches the closed form") {
  for (const CanonicalForm& f : forms()) {
    const PSequence closed(f);
    // the raw sequence starts with the branch that reaches x_{1/2}
    const QuadraticSymmetricPolynomial P = f.polynomial();
    const int branch = std::abs(psequence_step(P, f.value(0), +1) - f.value(1)) <
                               std::abs(psequence_step(P, f.value(0), -1) - f.value(1))
                           ? +1
                           : -1;
    const PSequence raw(P, f.value(0), branch);
    for (long h = -8; h <= 8; ++h)
      CHECK(std::abs(raw.at_half(h) - closed.at_half(h)) <= 1e-10 * (1.0 + std::abs(closed.at_half(h))));
  }
}

TEST_CASE("rebased sequences") {
  const PSequence s(forms()[1]);
  const PSequence r = s.rebased(3);
  CHECK(r.base_point() == s.at_half(3));
  CHECK(r.at_half(2) == s.at_half(5));
  CHECK(r.at_half(-4) == s.at_half(-1));
}

TEST_CASE("Phi_k") {
  const PSequence s(forms()[0]);
  const cplx y(0.3, -0.8);
  CHECK(phi(s, 0, y) == cplx(1.0));
  CHECK(phi(s, 1, y) == y - s.at_half(0));
  CHECK(std::abs(phi(s, 2, y) - s.polynomial()(s.base_point(), y)) < 1e-12);
}

TEST_CASE("lambda bracket") {
  CHECK(lambda_bracket(7, 1.0) == cplx(7.0));
  CHECK(lambda_bracket(1, lam) == cplx(1.0));
  CHECK(std::abs(lambda_bracket(3, 2.0) - 5.25) < 1e-15);
  CHECK(std::abs(lambda_bracket(4, -1.0) - (-4.0)) < 1e-15);
  const cplx l(0.9, 0.2);
  CHECK(std::abs(lambda_bracket(5, l) - (std::pow(l, 5) - std::pow(l, -5)) / (l - 1.0 / l)) < 1e-13);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(CanonicalForm::trigonometric(1.0, 1.0).validate(), DomainError);
  CHECK_THROWS_AS(CanonicalForm::trigonometric(lam, 0.0).validate(), DomainError);
  CHECK_THROWS_AS(CanonicalForm::geometric(0.0, 1.0).validate(), DomainError);
  CHECK_THROWS_AS(parse_form_tag("X"), DomainError);
  CHECK(parse_form_tag("G") == FormTag::G);
  CHECK(to_string(FormTag::T) == "T");
}
