#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mkappa {

// Root of every error the library throws. The CLI maps the concrete kind to
// an exit code, so callers should not throw plain std::runtime_error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the operation's domain: universe mismatch, overlapping
// minor spec, unknown label, label collision.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (dependent input, non-basis, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search would exceed its configured element budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Indicates a bug, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : DomainError("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mkappa
