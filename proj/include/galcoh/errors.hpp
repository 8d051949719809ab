#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galcoh {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (not a subgroup, B*A != 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Never expected on valid input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Scenario text could not be parsed; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace galcoh
