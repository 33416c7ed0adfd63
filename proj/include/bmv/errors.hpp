#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bmv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Valuation or degree requested of the zero polynomial.
struct ZeroPolynomial : Error {
  using Error::Error;
};

struct InvalidExponent : Error {
  using Error::Error;
};

/// Raised where a word must contain both letters.
struct SingleLetterWord : Error {
  using Error::Error;
};

/// An exhaustive search would exceed its configured size cap.
struct ComplexityGuard : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

/// Two independent computation routes produced different results.
struct RouteMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

}  // namespace bmv
