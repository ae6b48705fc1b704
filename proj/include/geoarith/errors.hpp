#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geoarith {

/// An index, matrix size or factorization argument exceeded a configured bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed textual input. line() is 1-based; 0 means the input as a whole.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace geoarith
