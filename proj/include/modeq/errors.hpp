#pragma once

#include <stdexcept>
#include <string>

namespace modeq {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// q outside the range an identity has been validated on.
class GridRangeError : public Error {
 public:
  using Error::Error;
};

/// Finite-difference step too small to resolve at the working precision.
class StepTooSmall : public Error {
 public:
  using Error::Error;
};

/// Russell sign (-1)^((n1+n2)/8) requested for a pair with 8 not dividing n1+n2.
class SignUndefined : public Error {
 public:
  using Error::Error;
};

/// Bad command line or configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace modeq
