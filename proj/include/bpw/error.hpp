#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bpw {

/// Base class of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by a scalar that normalizes to zero.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A (k+3) or (2k'+3) denominator vanished.
class SingularLevelError : public Error {
 public:
  using Error::Error;
};

/// A configured resource guard (weight, recursion depth, slice size) tripped.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

/// Unknown generator or factor name.
class UnknownGeneratorError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent algebra description or invalid operation input.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Lexical or syntactic error with a 1-based source position and the set of
/// tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {})
      : Error(format(message, line, column, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column,
                            const std::vector<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
      out += " (expected one of:";
      for (const auto& e : expected) out += " " + e;
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace bpw
