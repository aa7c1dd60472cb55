#pragma once

// Quadratic polynomials A z^2 + B z + C: reduction to z^2 + c, the
// integrality criterion on 4c, and good models of z^2 + k/4 over Q.

#include <vector>

#include "grd/pgr.hpp"

namespace grd {

RatMap2 quadratic_map(const Rational& a, const Rational& b, const Rational& c);

struct QuadraticNormalization {
  Rational c;
  /// quadratic_map(A, B, C)^conjugator = z^2 + c up to scaling.
  Moebius conjugator;
};
/// std::invalid_argument when A = 0.
QuadraticNormalization normalize_quadratic(const Rational& a, const Rational& b, const Rational& c);

struct QuadraticPgr {
  bool pgr;
  std::vector<Prime> failing_primes;
};
/// z^2 + c has potential good reduction iff 4c is an integer.
QuadraticPgr pgr_quadratic(const Rational& c);

/// Conjugate z^2 + c by z + (1 + sqrt(1 - 4c))/2, giving
/// z^2 + (1 + sqrt(1 - 4c)) z. std::invalid_argument unless 4c is integral.
PgrCertificate conjugate_to_good_quadratic(const Rational& c);

struct K4Result {
  bool good_over_q;
  Integer b;  // z^2 + b z + c, valid when good_over_q
  Integer c;
};
/// z^2 + k/4 has a Q-model with good reduction iff k = 0, 1 mod 4.
K4Result k4_criterion(const Integer& k);

}  // namespace grd
