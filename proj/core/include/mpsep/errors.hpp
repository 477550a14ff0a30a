#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpsep {

/// Mismatched or invalid widths/arities.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force routine refused an input larger than its guard.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text input; line() is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mpsep
