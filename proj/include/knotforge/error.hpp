// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <stdexcept>
#include <string>

namespace knotforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. qbinom(3, 5)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller-supplied parameters violate a precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Missing data for a requested index range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A result that should be impossible for valid inputs.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Input outside the stated scope of a theorem check (e.g. nonzero framing).
class ScopeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotforge
