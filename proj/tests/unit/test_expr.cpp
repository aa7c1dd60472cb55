#include <doctest.h>

#include "grd/expr.hpp"
#include "oracles.hpp"

using namespace grd;
using oracle::map;

TEST_CASE("parse_map examples") {
  const RatMap2 a = parse_map("(z^2-2*z)/(-2*z+1)");
  CHECK(a.f() == QuadForm{1, -2, 0});
  CHECK(a.g() == QuadForm{0, -2, 1});
  const RatMap2 b = parse_map("z^2+5/4");
  CHECK(b.f() == QuadForm{1, 0, Coeff(Rational(5, 4))});
  CHECK(b.g() == QuadForm{0, 0, 1});
  CHECK_THROWS_AS(parse_map("(z^3)/(z+1)"), std::invalid_argument);
}

TEST_CASE("expression forms") {
  CHECK(same_map(parse_map("z + 1 + 1/z"), map(1, 1, 1, 0, 1, 0)));
  CHECK(same_map(parse_map("(z+1)^2/(z-1)^2"), map(1, 2, 1, 1, -2, 1)));
  CHECK(same_map(parse_map("z^2 * z^-1 * z"), map(1, 0, 0, 0, 0, 1)));
  CHECK(same_map(parse_map("-(-z)^2"), map(-1, 0, 0, 0, 0, 1)));
  CHECK(same_map(parse_map("(3*z^2+1)/3"), parse_map("z^2+1/3")));
  CHECK(same_map(parse_map("  ( z ^ 2 ) / ( 2 ) "), parse_map("z^2/2")));
  CHECK(same_map(parse_map("1/(1/z^2)"), map(1, 0, 0, 0, 0, 1)));
  // U+2212 minus.
  CHECK(same_map(parse_map("z^2\xE2\x88\x92" "2*z"), map(1, -2, 0, 0, 0, 1)));
  // Common factors cancel: (z^3 - z^2)/(z - 1) = z^2.
  CHECK(same_map(parse_map("(z^3-z^2)/(z-1)"), map(1, 0, 0, 0, 0, 1)));
  // Printing a parsed map and parsing again gives the same map.
  for (const char* s : {"(z^2-2*z)/(-2*z+1)", "z^2+5/4", "(2*z^2+3*z-5)/(7*z^2-1)", "(z^2+13*z)/(z+1)"}) {
    const RatMap2 m = parse_map(s);
    CHECK(parse_map(m.to_string()) == m);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_map("z^2 + * 3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  try {
    parse_map("(z^2+1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_map(""), ParseError);
  CHECK_THROWS_AS(parse_map("x^2"), ParseError);
  CHECK_THROWS_AS(parse_map("z^2/0"), ParseError);
  CHECK_THROWS_AS(parse_map("z^z"), ParseError);
  CHECK_THROWS_AS(parse_map("z^1000"), ParseError);
  CHECK_THROWS_AS(parse_map("z^2 3"), ParseError);
}

TEST_CASE("degree checks") {
  CHECK_THROWS_AS(parse_map("z+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("z^2/z"), std::invalid_argument);  // cancels to degree 1
  CHECK_THROWS_AS(parse_map("(z^2-1)/(z+1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("z^3"), std::invalid_argument);
  CHECK_NOTHROW(parse_map("1/z^2"));
}
