#pragma once

// Test-side reference computations. They deliberately avoid the library's
// algorithms (Sylvester determinants, content splitting, Sturm roots) and
// use small closed forms or brute force instead.

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "grd/pgr.hpp"

namespace oracle {

using grd::Coeff;
using grd::Rational;
using grd::RatMap2;

inline RatMap2 map(long f2, long f1, long f0, long g2, long g1, long g0) {
  return RatMap2({Coeff(f2), Coeff(f1), Coeff(f0)}, {Coeff(g2), Coeff(g1), Coeff(g0)});
}

/// p-adic valuation of a nonzero rational by repeated division.
inline long val(const Rational& x, long p) {
  if (x.is_zero()) throw std::invalid_argument("val of zero");
  grd::Integer n = x.num(), d = x.den();
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

/// Resultant by evaluating G at the roots of F symbolically: for
/// F = f2 (X - r1 Y)(X - r2 Y) the resultant is f2^2 G(r1, 1) G(r2, 1);
/// expanding in r1 + r2 and r1 r2 gives a polynomial identity usable even
/// when the roots are irrational. Requires f2 != 0.
inline Coeff resultant_via_roots(const grd::QuadForm& f, const grd::QuadForm& g) {
  const Coeff s = -f[1] / f[0];  // r1 + r2
  const Coeff q = f[2] / f[0];   // r1 r2
  // G(r1) G(r2) with G(r) = g2 r^2 + g1 r + g0.
  const Coeff prod = g[0] * g[0] * q * q + g[0] * g[1] * s * q + g[0] * g[2] * (s * s - Coeff(2) * q) +
                     g[1] * g[1] * q + g[1] * g[2] * s + g[2] * g[2];
  return f[0] * f[0] * prod;
}

/// phi'(z) for an affine fixed point, by the quotient rule.
inline Coeff derivative_at(const RatMap2& m, const Coeff& z) {
  const auto& f = m.f();
  const auto& g = m.g();
  const Coeff F = f[0] * z * z + f[1] * z + f[2];
  const Coeff G = g[0] * z * z + g[1] * z + g[2];
  const Coeff dF = Coeff(2) * f[0] * z + f[1];
  const Coeff dG = Coeff(2) * g[0] * z + g[1];
  return (dF * G - F * dG) / (G * G);
}

/// Random degree-2 map with coefficients in [-h, h].
inline RatMap2 random_map(std::mt19937_64& rng, int h) {
  std::uniform_int_distribution<int> d(-h, h);
  while (true) {
    const long c[6] = {d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    const grd::QuadForm f{Coeff(c[0]), Coeff(c[1]), Coeff(c[2])};
    const grd::QuadForm g{Coeff(c[3]), Coeff(c[4]), Coeff(c[5])};
    if (grd::resultant_by_formula(f, g).is_zero()) continue;
    return RatMap2(f, g);
  }
}

/// Random integral Moebius map with entries in [-h, h].
inline grd::Moebius random_moebius(std::mt19937_64& rng, int h) {
  std::uniform_int_distribution<int> d(-h, h);
  while (true) {
    const long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (a * e - b * c != 0) return grd::Moebius(a, b, c, e);
  }
}

/// Lambda_3 from the fixed-point formula, computed without the library.
inline Rational lambda3(const Rational& l1, const Rational& l2) {
  return (Rational(2) - l1 - l2) / (Rational(1) - l1 * l2);
}

}  // namespace oracle
