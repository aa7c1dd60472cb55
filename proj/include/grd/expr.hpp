#pragma once

// Parser for rational-map expressions in z such as "(z^2-2*z)/(-2*z+1)".
// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer ['/' integer] | 'z' | '(' expr ')'
// Literals like 5/4 come out of ordinary division.

#include <stdexcept>
#include <string>
#include <string_view>

#include "grd/ratmap.hpp"

namespace grd {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Rational function N/D over Q, not yet reduced.
struct RationalFunction {
  Poly num;
  Poly den;
};

/// Syntax only; no degree check. Throws ParseError.
RationalFunction parse_rational_function(std::string_view text);

/// Parses, cancels common factors and checks that the result has degree
/// exactly 2. Constant denominators are divided out so "z^2+5/4" has
/// G = (0, 0, 1). Throws ParseError on syntax errors and
/// std::invalid_argument on degree problems.
RatMap2 parse_map(std::string_view text);

}  // namespace grd
