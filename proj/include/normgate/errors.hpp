#pragma once

#include <stdexcept>
#include <string>

namespace normgate {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite numbers, empty matrices, malformed arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Root bracket without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Evaluation outside the domain of a function (t < 0, table extrapolation).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A result contradicts a mathematical identity that must hold.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A reproduced example value did not match.
class ReproductionFailed : public Error {
 public:
  using Error::Error;
};

/// Spectral data that does not describe a valid spectrum.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace normgate
