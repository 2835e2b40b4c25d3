#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

// Base of everything the library throws. The CLI maps each subclass to an
// exit code (see tools/tropmetric.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of operands do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (e.g. a non-idempotent matrix
// passed where an idempotent is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Two independent computations of a proven equivalence disagreed. This is
// always an implementation bug, never a user error.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropical
