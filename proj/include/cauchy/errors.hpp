#pragma once

#include <stdexcept>
#include <string>

namespace cauchy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace cauchy
