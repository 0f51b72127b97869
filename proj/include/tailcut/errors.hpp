#pragma once

#include <stdexcept>
#include <string>

namespace tailcut {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between an exact and a real Scalar, or an unsupported conversion.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (index out of range, bad order, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Family parameters for which the expansion does not exist (z = 1, s = 1, ...).
class DegenerateParameter : public Error {
 public:
  DegenerateParameter(std::string parameter, const std::string& message)
      : Error(message), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

/// Singular Toeplitz system while building a Pade approximant.
class DegeneratePade : public Error {
 public:
  using Error::Error;
};

/// Rational approximant evaluated at a zero of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Reference computation failed its own consistency check.
class OracleFailure : public Error {
 public:
  using Error::Error;
};

/// A structural invariant the algorithms rely on did not hold. Indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tailcut
