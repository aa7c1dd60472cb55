#pragma once

// Fixed points, multipliers and the moduli point (sigma1, sigma2) of a
// degree-2 map, plus conversion to the two standard normal forms
//   A: (z^2 + l1 z) / (l2 z + 1)     (l1 l2 != 1)
//   B: z + s + 1/z,  s^2 = 1 - l3    (double fixed point of multiplier 1)

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grd/ratmap.hpp"

namespace grd {

/// Coefficients of X^3, X^2 Y, X Y^2, Y^3.
using CubicForm = std::array<Coeff, 4>;

/// X*G - Y*F; its projective roots are the fixed points with multiplicity.
CubicForm fixed_point_form(const RatMap2& m);

struct FixedPoint {
  ProjPoint point;
  int multiplicity;
};

/// Distinct fixed points when they lie in Q or a single quadratic extension.
std::optional<std::vector<FixedPoint>> fixed_points(const RatMap2& m);

/// phi'(P) at a fixed point P; std::invalid_argument if P is not fixed.
Coeff multiplier_at(const RatMap2& m, const ProjPoint& p);

struct MultiplierSpectrum {
  Coeff sigma1;
  Coeff sigma2;
  Coeff sigma3;
  /// Roots of the multiplier cubic with multiplicity, when it splits over Q
  /// or a single quadratic extension.
  std::optional<std::vector<Coeff>> multipliers;

  friend bool operator==(const MultiplierSpectrum& x, const MultiplierSpectrum& y) {
    return x.sigma1 == y.sigma1 && x.sigma2 == y.sigma2 && x.sigma3 == y.sigma3;
  }
};

/// Monic multiplier polynomial lambda^3 - s1 lambda^2 + s2 lambda - s3 from a
/// resultant of the fixed-point form against lambda*G^2 - (F'G - FG'); no
/// root finding involved.
MultiplierSpectrum sigma_invariants(const RatMap2& m);

/// (2 - l1 - l2) / (1 - l1 l2); std::invalid_argument when l1 l2 = 1.
Coeff lambda3_from_pair(const Coeff& lambda1, const Coeff& lambda2);

/// sigma1, sigma2 integral at p, or algebraic integers when p is absent.
bool is_integral_point(const MultiplierSpectrum& s, const std::optional<Prime>& p = std::nullopt);

/// Primes at which sigma1 or sigma2 fails to be integral, ascending.
std::vector<Prime> non_integral_primes(const MultiplierSpectrum& s);

class NotConstructible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormalForm {
  enum class Kind { FormA, FormB };
  Kind kind;
  /// FormA: multipliers at 0 and infinity.
  Coeff lambda1;
  Coeff lambda2;
  /// FormB: the simple fixed point's multiplier and s with s^2 = 1 - l3.
  Coeff lambda3;
  Coeff sqrt_term;
  /// m^conjugator equals `model` up to scaling.
  Moebius conjugator;
  RatMap2 model;
  /// Radicand of the field the conjugator lives in (1 for Q).
  Integer extension;
};

RatMap2 form_a_map(const Coeff& lambda1, const Coeff& lambda2);
RatMap2 form_b_map(const Coeff& sqrt_term);

/// Throws NotConstructible when the fixed points need more than one
/// quadratic extension or the map has irrational coefficients.
NormalForm to_normal_form(const RatMap2& m);

}  // namespace grd
