#pragma once

// Quadratic symmetric polynomials P(x,y), their canonical forms and the
// bi-infinite sequences (x_t), t in Z/2, on which P factors.

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "awtaylor/error.hpp"

namespace awt {

/// P(x,y) = x^2 + y^2 - 2a xy - 2b (x+y) + c.
struct QuadraticSymmetricPolynomial {
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};
  cplx c{0.0, 0.0};

  cplx operator()(cplx x, cplx y) const { return x * x + y * y - 2.0 * a * x * y - 2.0 * b * (x + y) + c; }
  cplx A(cplx x) const { return a * x + b; }
  cplx B(cplx x) const { return x * x - 2.0 * b * x + c; }
  cplx delta(cplx x) const { return (a * a - 1.0) * x * x + 2.0 * b * (a + 1.0) * x + b * b - c; }

  /// A root of a = (lambda + 1/lambda)/2; the other root is its inverse.
  cplx lambda() const;

  bool operator==(const QuadraticSymmetricPolynomial&) const = default;
};

enum class FormTag { T, G, Q, A, C };

std::string to_string(FormTag tag);
FormTag parse_form_tag(const std::string& s);

/// Canonical representative of an affine orbit, with its sequence parameter u.
/// Forms T and G carry lambda (q = lambda^2); Q, A and C have lambda = 1.
struct CanonicalForm {
  FormTag tag = FormTag::C;
  cplx lambda{1.0, 0.0};
  cplx u{0.0, 0.0};

  static CanonicalForm trigonometric(cplx lambda, cplx u);
  static CanonicalForm geometric(cplx lambda, cplx u);
  static CanonicalForm quadratic(cplx u);
  static CanonicalForm arithmetic(cplx u);
  static CanonicalForm continuous(cplx u);

  cplx q() const { return lambda * lambda; }
  QuadraticSymmetricPolynomial polynomial() const;
  /// Closed-form sequence value at t = half_steps / 2.
  cplx value(long half_steps) const;
  void validate() const;
};

/// x_{t +- 1/2} = A(x_t) +- sqrt(delta(x_t)) with the principal root.
cplx psequence_step(const QuadraticSymmetricPolynomial& P, cplx x, int sign);

/// A P-sequence with a fixed base point x_0. Indices are counts of half
/// steps: at_half(k) is x_{k/2}. Sequences given by a raw polynomial are
/// generated by the recurrence (first step with the declared branch, then
/// x_{t+1/2} = 2A(x_t) - x_{t-1/2}) and cached; copies share the cache and
/// concurrent readers are safe.
class PSequence {
 public:
  static constexpr long kMaxSteps = 1'000'000;

  explicit PSequence(const CanonicalForm& form, int branch = +1);
  PSequence(const QuadraticSymmetricPolynomial& P, cplx base_point, int branch = +1);

  cplx at_half(long half_steps) const;
  cplx at(long j) const { return at_half(2 * j); }
  cplx base_point() const { return base_; }
  int branch() const { return branch_; }
  cplx lambda() const;
  const QuadraticSymmetricPolynomial& polynomial() const { return P_; }
  const std::optional<CanonicalForm>& canonical() const { return form_; }

  /// The same sequence re-indexed so that x_{shift/2} becomes the base point.
  PSequence rebased(long half_steps) const;

 private:
  struct Cache;

  QuadraticSymmetricPolynomial P_;
  std::optional<CanonicalForm> form_;
  cplx base_;
  cplx origin_;  // x_0 of the underlying (un-rebased) sequence
  int branch_;
  long offset_ = 0;  // half-step offset applied by rebased()
  std::shared_ptr<Cache> cache_;
};

cplx psequence_value(const PSequence& seq, long half_steps);

/// Phi_k(x, y) = prod_{j<k} (y - x_{j-(k-1)/2}) for the sequence based at x.
cplx phi(const PSequence& seq, int k, cplx y);

/// (lambda^k - lambda^-k) / (lambda - 1/lambda), evaluated as the finite sum
/// lambda^{k-1} + lambda^{k-3} + ... + lambda^{1-k}; equals k sigma^{k-1} at
/// lambda = sigma = +-1.
cplx lambda_bracket(int k, cplx lambda);

}  // namespace awt
