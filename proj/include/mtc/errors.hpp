#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation (q = 0 in
/// ζ_q, non-coprime Galois index, E(0) in an expression, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A value was expected to lie in a subfield ℚ(ζ_m) and does not.
class DescentError : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed modular data: missing or ambiguous unit, twist that is not a
/// root of unity, non-square S, ...
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Data that violates a defining relation (reported by validate).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be a non-negative rational integer is not. Raised by
/// Verlinde and by every multiplicity computation.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure (anomalous center, descent failure inside the
/// indicator pipeline, empty candidate set, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Input the pipeline deliberately refuses (e.g. π(g)A on anomalous data).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an expression or data file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::string expected = {})
      : Error(format(message, line, column, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column,
                            const std::string& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!expected.empty()) out += " (expected " + expected + ")";
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

/// Grid dimensions in a data file disagree with the declared rank.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

}  // namespace mtc
