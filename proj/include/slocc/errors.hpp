#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slocc {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero or inversion of a singular matrix.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Shape or format mismatch between arguments, or a format an operation does
/// not accept.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain: zero tensor where a ray is expected,
/// zero party vector, non-critical point handed to the Hessian, unknown class.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The hyperdeterminant of this format does not exist (polygon inequality
/// k1 <= k2 + ... + kn fails after sorting).
class PolygonInequalityViolated : public Error {
 public:
  using Error::Error;
};

/// Hyperdeterminant exists but no engine for the format is provided.
class NotImplemented : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(describe(what, line, column)), line_(line), column_(column) {}

  /// 1-based; 0 when the input is a single token.
  std::size_t line() const { return line_; }
  /// 1-based character position within the line or token.
  std::size_t column() const { return column_; }

 private:
  static std::string describe(const std::string& what, std::size_t line,
                              std::size_t column) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ", ";
    out += "column " + std::to_string(column) + ": " + what;
    return out;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace slocc
