// Exception types shared by the compas library and command-line front end.

#pragma once

#include <stdexcept>
#include <string>

namespace compas {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A precondition on argument values was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two rhythms were compared on different cycle lengths.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured subset budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace compas
