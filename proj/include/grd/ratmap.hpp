#pragma once

// Degree-2 rational maps phi = F/G stored as a pair of binary quadratic forms
//   F(X,Y) = f2 X^2 + f1 XY + f0 Y^2,  G(X,Y) = g2 X^2 + g1 XY + g0 Y^2,
// together with Moebius transformations acting on them by conjugation.

#include <array>
#include <string>

#include "grd/exactnum.hpp"
#include "grd/poly.hpp"

namespace grd {

/// Coefficients (x2, xy, y2) of a binary quadratic form.
using QuadForm = std::array<Coeff, 3>;

/// Point (x : y) of the projective line; infinity is (1 : 0).
class ProjPoint {
 public:
  /// Throws std::invalid_argument for (0 : 0).
  ProjPoint(Coeff x, Coeff y);
  static ProjPoint affine(Coeff z) { return ProjPoint(std::move(z), Coeff(1)); }
  static ProjPoint infinity() { return ProjPoint(Coeff(1), Coeff(0)); }

  const Coeff& x() const { return x_; }
  const Coeff& y() const { return y_; }
  bool is_infinity() const { return y_.is_zero(); }
  /// x/y; throws std::domain_error at infinity.
  Coeff value() const;

  friend bool operator==(const ProjPoint& p, const ProjPoint& q);
  std::string to_string() const;

 private:
  Coeff x_;
  Coeff y_;
};

/// f(z) = (a z + b) / (c z + d) with ad - bc != 0.
class Moebius {
 public:
  /// Throws std::invalid_argument when ad - bc = 0.
  Moebius(Coeff a, Coeff b, Coeff c, Coeff d);
  static Moebius identity() { return Moebius(1, 0, 0, 1); }
  /// z + s
  static Moebius translation(const Coeff& s) { return Moebius(1, s, 0, 1); }
  /// u z
  static Moebius scaling(const Coeff& u) { return Moebius(u, 0, 0, 1); }
  /// 1 / z
  static Moebius inversion() { return Moebius(0, 1, 1, 0); }

  const Coeff& a() const { return a_; }
  const Coeff& b() const { return b_; }
  const Coeff& c() const { return c_; }
  const Coeff& d() const { return d_; }
  Coeff det() const { return a_ * d_ - b_ * c_; }

  ProjPoint apply(const ProjPoint& p) const;
  Moebius inverse() const { return Moebius(d_, -b_, -c_, a_); }
  /// Equality in PGL2 (up to a common scalar).
  bool same_as(const Moebius& o) const;

  std::string to_string() const;

 private:
  Coeff a_, b_, c_, d_;
};

/// (f o g)(z) = f(g(z)); matrix product f * g.
Moebius compose(const Moebius& f, const Moebius& g);

class RatMap2 {
 public:
  /// Throws std::invalid_argument if F and G share a projective root (the
  /// map then has degree < 2); this also rejects the all-zero pair.
  RatMap2(QuadForm f, QuadForm g);

  const QuadForm& f() const { return f_; }
  const QuadForm& g() const { return g_; }

  /// Affine numerator F(z, 1) and denominator G(z, 1).
  Poly numerator() const;
  Poly denominator() const;

  ProjPoint apply(const ProjPoint& p) const;

  bool is_rational() const;
  /// Common radicand of the coefficients (1 over Q).
  Integer radicand() const;

  friend bool operator==(const RatMap2& x, const RatMap2& y) { return x.f_ == y.f_ && x.g_ == y.g_; }

  /// "(f2*z^2+f1*z+f0)/(g2*z^2+g1*z+g0)" with zero terms dropped.
  std::string to_string() const;

  /// Scale both forms by s (s != 0).
  RatMap2 scaled(const Coeff& s) const;

 private:
  QuadForm f_;
  QuadForm g_;
};

/// Resultant of the binary forms F, G via the 4x4 Sylvester determinant.
Coeff resultant(const QuadForm& f, const QuadForm& g);
Coeff resultant(const RatMap2& m);
/// (f2 g0 - f0 g2)^2 - (f2 g1 - f1 g2)(f1 g0 - f0 g1); matches the Sylvester value.
Coeff resultant_by_formula(const QuadForm& f, const QuadForm& g);

/// phi^f = f^{-1} o phi o f without any rescaling; Res scales by det(f)^6.
RatMap2 conjugate(const RatMap2& m, const Moebius& f);

/// m = content * primitive with primitive integral (Z or Z[sqrt t]) and
/// content-free, first nonzero coefficient positive.
struct ContentSplit {
  Coeff content;
  RatMap2 primitive;
};
ContentSplit split_content(const RatMap2& m);
RatMap2 normalize_content(const RatMap2& m);

/// Equality up to a common nonzero scalar.
bool same_map(const RatMap2& x, const RatMap2& y);

/// Normalized resultant is a unit at every prime above p.
bool good_reduction_at(const RatMap2& m, const Prime& p);

/// Degree of the reduction mod p after cancelling common factors of the
/// reduced forms; -1 when one reduced form vanishes identically. Requires
/// rational coefficients (std::domain_error otherwise).
int degree_of_reduction(const RatMap2& m, const Prime& p);

std::string format_form(const QuadForm& q);

}  // namespace grd
