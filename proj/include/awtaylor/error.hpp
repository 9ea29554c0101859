#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace awt {

using cplx = std::complex<double>;

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input lies outside the domain where an operation is defined
/// (violated precondition, rejected parameter set, malformed request).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation was well posed but did not reach its accuracy target:
/// series or product truncation, quadrature refinement, tail estimates.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace awt
