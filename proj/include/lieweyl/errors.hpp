#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieweyl {

/// A truncated operator was asked for coefficients it does not determine.
class InsufficientOrder : public std::runtime_error {
 public:
  InsufficientOrder(const std::string& what, std::size_t required, std::size_t available)
      : std::runtime_error(what + " (requires order " + std::to_string(required) + ", have " +
                           std::to_string(available) + ")"),
        required_(required),
        available_(available) {}

  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Malformed textual or JSON input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

}  // namespace lieweyl
