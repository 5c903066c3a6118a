#pragma once

#include <stdexcept>
#include <string>

namespace apz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (s <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series whose coefficients grow too fast to converge.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Rational function that has no expansion in the 1/(p^j - 1) basis.
class BasisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Request exceeds a configured memory or table size limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text or command line.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An identity or cross-check that should hold numerically did not.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// NaN or overflow produced by an arithmetic kernel.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace apz
