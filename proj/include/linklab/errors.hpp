#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace linklab {

// Base of every failure the engine raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Objects from different rings mixed together, exponent length mismatches,
// malformed raw term data. These indicate caller bugs, not bad math input.
struct StructuralError : Error {
  using Error::Error;
};

// Mathematically invalid request: colon by the zero ideal, dimension of the
// empty ring, saturation by a zero element, violated preconditions.
struct DomainError : Error {
  using Error::Error;
};

// Rejected input text. Positions are 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line(line),
        col(col) {}
  std::size_t line;
  std::size_t col;
};

}  // namespace linklab
