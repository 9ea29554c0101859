#include "awtaylor/psequence.hpp"

#include <mutex>
#include <vector>

namespace awt {

cplx QuadraticSymmetricPolynomial::lambda() const { return a + std::sqrt(a * a - 1.0); }

std::string to_string(FormTag tag) {
  switch (tag) {
    case FormTag::T: return "T";
    case FormTag::G: return "G";
    case FormTag::Q: return "Q";
    case FormTag::A: return "A";
    case FormTag::C: return "C";
  }
  return "?";
}

FormTag parse_form_tag(const std::string& s) {
  if (s == "T") return FormTag::T;
  if (s == "G") return FormTag::G;
  if (s == "Q") return FormTag::Q;
  if (s == "A") return FormTag::A;
  if (s == "C") return FormTag::C;
  throw DomainError("unknown canonical form '" + s + "' (expected T, G, Q, A or C)");
}

CanonicalForm CanonicalForm::trigonometric(cplx lambda, cplx u) { return {FormTag::T, lambda, u}; }
CanonicalForm CanonicalForm::geometric(cplx lambda, cplx u) { return {FormTag::G, lambda, u}; }
CanonicalForm CanonicalForm::quadratic(cplx u) { return {FormTag::Q, 1.0, u}; }
CanonicalForm CanonicalForm::arithmetic(cplx u) { return {FormTag::A, 1.0, u}; }
CanonicalForm CanonicalForm::continuous(cplx u) { return {FormTag::C, 1.0, u}; }

void CanonicalForm::validate() const {
  if (tag == FormTag::T || tag == FormTag::G) {
    if (lambda == cplx(0.0, 0.0)) throw DomainError("canonical form: lambda must be nonzero");
    if (std::abs(lambda - 1.0) < 1e-12 || std::abs(lambda + 1.0) < 1e-12)
      throw DomainError("canonical form: forms T and G require a != +-1 (lambda != +-1)");
  }
  if (tag == FormTag::T && u == cplx(0.0, 0.0)) throw DomainError("canonical form T: u must be nonzero");
}

QuadraticSymmetricPolynomial CanonicalForm::polynomial() const {
  switch (tag) {
    case FormTag::T: {
      const cplx a = 0.5 * (lambda + 1.0 / lambda);
      return {a, 0.0, a * a - 1.0};
    }
    case FormTag::G: return {0.5 * (lambda + 1.0 / lambda), 0.0, 0.0};
    case FormTag::Q: return {1.0, 0.25, 1.0 / 16.0};
    case FormTag::A: return {1.0, 0.0, -0.25};
    case FormTag::C: return {1.0, 0.0, 0.0};
  }
  return {};
}

cplx CanonicalForm::value(long half_steps) const {
  const double t = 0.5 * static_cast<double>(half_steps);
  switch (tag) {
    case FormTag::T: {
      const cplx p = std::pow(lambda, static_cast<double>(half_steps));  // lambda^{2t}
      return 0.5 * (p * u + 1.0 / (p * u));
    }
    case FormTag::G: return std::pow(lambda, static_cast<double>(half_steps)) * u;
    case FormTag::Q: return (t + u) * (t + u);
    case FormTag::A: return t + u;
    case FormTag::C: return u;
  }
  return {};
}

cplx psequence_step(const QuadraticSymmetricPolynomial& P, cplx x, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("psequence_step: sign must be +1 or -1");
  return P.A(x) + static_cast<double>(sign) * std::sqrt(P.delta(x));
}

struct PSequence::Cache {
  std::mutex mutex;
  std::vector<cplx> forward;   // x_{1/2}, x_1, x_{3/2}, ...
  std::vector<cplx> backward;  // x_{-1/2}, x_{-1}, ...
};

PSequence::PSequence(const CanonicalForm& form, int branch)
    : P_(form.polynomial()), form_(form), base_(form.value(0)), origin_(base_), branch_(branch) {
  if (branch != 1 && branch != -1) throw DomainError("PSequence: branch must be +1 or -1");
  form.validate();
}

PSequence::PSequence(const QuadraticSymmetricPolynomial& P, cplx base_point, int branch)
    : P_(P), base_(base_point), origin_(base_point), branch_(branch), cache_(std::make_shared<Cache>()) {
  if (branch != 1 && branch != -1) throw DomainError("PSequence: branch must be +1 or -1");
}

cplx PSequence::lambda() const { return form_ ? form_->lambda : P_.lambda(); }

PSequence PSequence::rebased(long half_steps) const {
  PSequence copy = *this;
  copy.offset_ += half_steps;
  copy.base_ = at_half(half_steps);
  return copy;
}

cplx PSequence::at_half(long half_steps) const {
  const long k = half_steps + offset_;
  if (form_) return form_->value(branch_ * k);
  if (k == 0) return origin_;

  const long steps = k > 0 ? k : -k;
  if (steps > kMaxSteps) throw DomainError("PSequence: step cap exceeded");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& side = k > 0 ? cache_->forward : cache_->backward;
  if (side.empty()) {
    // The declared branch fixes which root is x_{+1/2}; x_{-1/2} is the other.
    const int sign = (k > 0 ? 1 : -1) * branch_;
    side.push_back(psequence_step(P_, origin_, sign));
  }
  while (static_cast<long>(side.size()) < steps) {
    const std::size_t n = side.size();
    const cplx current = side[n - 1];
    const cplx previous = n >= 2 ? side[n - 2] : origin_;
    side.push_back(2.0 * P_.A(current) - previous);
  }
  return side[static_cast<std::size_t>(steps - 1)];
}

cplx psequence_value(const PSequence& seq, long half_steps) { return seq.at_half(half_steps); }

cplx phi(const PSequence& seq, int k, cplx y) {
  if (k < 0) throw DomainError("phi: k must be nonnegative");
  cplx result(1.0, 0.0);
  for (int j = 0; j < k; ++j) result *= y - seq.at_half(2L * j - (k - 1));
  return result;
}

cplx lambda_bracket(int k, cplx lambda) {
  if (lambda == cplx(0.0, 0.0)) throw DomainError("lambda_bracket: lambda must be nonzero");
  if (k < 0) return -lambda_bracket(-k, lambda);
  if (k == 0) return {0.0, 0.0};
  for (double sigma : {1.0, -1.0})
    if (std::abs(lambda - sigma) < 1e-8) return static_cast<double>(k) * std::pow(sigma, k - 1);
  const cplx inv2 = 1.0 / (lambda * lambda);
  cplx power = std::pow(lambda, k - 1);
  cplx sum(0.0, 0.0);
  for (int j = 0; j < k; ++j) {
    sum += power;
    power *= inv2;
  }
  return sum;
}

}  // namespace awt
