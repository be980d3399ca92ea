#pragma once
/**
 * @file errors.hpp
 * @brief Exception types shared by every module.
 */

#include <stdexcept>
#include <string>

namespace rbfam {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// Rational function evaluated where its denominator vanishes.
struct PoleError : Error {
  using Error::Error;
};

// Polynomial degree cap exceeded, grid too large, and similar.
struct ResourceError : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

// Precondition on the mathematical content failed (not a retraction,
// invalid datum, base mismatch, ...).
struct InvalidInput : Error {
  using Error::Error;
};

struct Unsupported : Error {
  using Error::Error;
};

// Two independent routes to the same answer disagreed.
struct InternalError : Error {
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string expected, std::string found)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": expected " + expected + ", found " + found),
        line_(line),
        column_(column),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::string expected_;
  std::string found_;
};

}  // namespace rbfam
