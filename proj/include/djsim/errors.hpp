#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace djsim {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in an expression string. `position` is the 1-based
/// character offset of the offending token (one past the end for EOF).
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Malformed file content (truth-table or netlist formats). Line and
/// column are 1-based; column 0 means "whole line".
class FormatError : public Error {
public:
  FormatError(std::size_t line, std::size_t column, const std::string& message)
      : Error(format_message(line, column, message)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format_message(std::size_t line, std::size_t column,
                                    const std::string& message) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Arity mismatch, missing variable, or arity cap violation.
class ArityError : public Error {
public:
  using Error::Error;
};

/// Requested (arity, class) combination has no member.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

/// Operation requires a constant-or-balanced function and got neither.
class PromiseError : public Error {
public:
  using Error::Error;
};

/// Invalid inputs or netlist handed to the analog evaluator.
class EvalError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace djsim
