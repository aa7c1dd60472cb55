#pragma once

// Dense univariate polynomials over the working field, coefficients stored
// from the constant term upward.

#include <optional>
#include <vector>

#include "grd/exactnum.hpp"

namespace grd {

using Coeff = QuadExtElem;

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs);
  static Poly constant(Coeff c) { return Poly({std::move(c)}); }
  static Poly monomial(Coeff c, int degree);
  /// x - r
  static Poly linear_root(const Coeff& r);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  Coeff operator[](int i) const;
  const std::vector<Coeff>& coeffs() const { return c_; }
  const Coeff& leading() const;

  Coeff eval(const Coeff& x) const;
  Poly derivative() const;
  Poly monic() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  friend Poly operator*(const Coeff& s, const Poly& x);
  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

  Poly pow(int e) const;

 private:
  void trim();
  std::vector<Coeff> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};
/// Euclidean division; throws std::domain_error for a zero divisor.
PolyDivision divmod(const Poly& num, const Poly& den);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& x, const Poly& y);

/// Determinant by exact Gaussian elimination.
Coeff determinant(std::vector<std::vector<Coeff>> m);

/// Resultant of x and y taken with formal degrees dx, dy (leading
/// coefficients may vanish) via the (dx+dy)x(dx+dy) Sylvester matrix.
Coeff sylvester_resultant(const Poly& x, int dx, const Poly& y, int dy);

/// Rational roots with multiplicity, ascending. Polynomial must be nonzero
/// with rational coefficients. Exact: Sturm isolation then a candidate check.
std::vector<Rational> rational_roots(const Poly& p);

/// All roots with multiplicity when p splits over Q or over a single
/// quadratic extension Q(sqrt t); empty optional otherwise.
std::optional<std::vector<Coeff>> roots_over_quadratic(const Poly& p);

}  // namespace grd
