#pragma once

#include <stdexcept>
#include <string>

namespace jhull {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dyadic integer ran out of trusted digits, or a table is too shallow.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the supported lambda regime.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold by construction was violated.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

/// Numerical routine failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace jhull
