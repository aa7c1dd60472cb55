#pragma once

// Exact arithmetic over Q and quadratic extensions Q(sqrt t), with p-adic
// valuations. Integers are GMP mpz_class; rationals wrap mpq_class.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grd {

using Integer = mpz_class;

std::string to_string(const Integer& n);

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer num() const { return Integer(q_.get_num()); }
  Integer den() const { return Integer(q_.get_den()); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(int e) const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// A certified rational prime.
class Prime {
 public:
  /// Throws std::invalid_argument unless `value` is prime.
  explicit Prime(const Integer& value);
  explicit Prime(long long value) : Prime(Integer(static_cast<long>(value))) {}

  const Integer& value() const { return p_; }
  friend bool operator==(const Prime&, const Prime&) = default;
  friend std::strong_ordering operator<=>(const Prime& x, const Prime& y) {
    const int c = cmp(x.p_, y.p_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Integer p_;
};

bool is_prime(const Integer& n);

/// Value of a valuation: a rational number or +infinity (for zero).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(Rational v) { return Valuation(std::move(v)); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error for +infinity.
  const Rational& value() const;

  friend Valuation operator+(const Valuation& x, const Valuation& y);
  friend bool operator==(const Valuation& x, const Valuation& y);
  friend std::strong_ordering operator<=>(const Valuation& x, const Valuation& y);

  std::string to_string() const;

 private:
  Valuation() : infinite_(true) {}
  explicit Valuation(Rational v) : infinite_(false), value_(std::move(v)) {}
  bool infinite_;
  Rational value_;
};

Valuation min(const Valuation& x, const Valuation& y);

/// Exponent of p in x; +infinity for x = 0.
Valuation val_p(const Rational& x, const Prime& p);
/// Integer exponent of p in a nonzero integer. Throws on zero.
long val_p_int(const Integer& n, const Prime& p);

/// Exact square root of a non-negative rational when it is a rational square.
/// Throws std::domain_error for negative input.
std::optional<Rational> sqrt_rational(const Rational& x);

/// Prime factorization of |n|, primes ascending. Throws on n = 0.
std::vector<std::pair<Prime, long>> factor_integer(const Integer& n);

/// n = s^2 * r with r square-free carrying the sign of n (n != 0).
struct SquarefreeSplit {
  Integer square_root_part;  // s > 0
  Integer squarefree;        // r
};
SquarefreeSplit squarefree_split(const Integer& n);

/// Element a + b*sqrt(t) of Q(sqrt t), t a square-free integer != 1.
///
/// Elements with b = 0 are plain rationals and combine with elements of any
/// extension; two elements with b != 0 over different t cannot be mixed.
class QuadExtElem {
 public:
  QuadExtElem() = default;
  QuadExtElem(long long v) : a_(v) {}
  QuadExtElem(const Integer& v) : a_(v) {}
  QuadExtElem(Rational a) : a_(std::move(a)) {}
  /// a + b*sqrt(t). `t` is reduced to a square-free integer, pulling square
  /// factors into b. Throws std::invalid_argument when t is a rational square.
  QuadExtElem(Rational a, Rational b, const Rational& t);

  /// sqrt(x) as an element of Q or of Q(sqrt(squarefree(x))).
  static QuadExtElem sqrt_of(const Rational& x);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  /// Square-free radicand; 1 for rational elements.
  const Integer& t() const { return t_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// Throws std::domain_error if not rational.
  const Rational& as_rational() const;

  Rational norm() const;   // a^2 - t b^2
  Rational trace() const;  // 2a
  QuadExtElem conj() const;

  QuadExtElem operator-() const;
  QuadExtElem& operator+=(const QuadExtElem& o);
  QuadExtElem& operator-=(const QuadExtElem& o);
  QuadExtElem& operator*=(const QuadExtElem& o);
  QuadExtElem& operator/=(const QuadExtElem& o);
  friend QuadExtElem operator+(QuadExtElem x, const QuadExtElem& y) { return x += y; }
  friend QuadExtElem operator-(QuadExtElem x, const QuadExtElem& y) { return x -= y; }
  friend QuadExtElem operator*(QuadExtElem x, const QuadExtElem& y) { return x *= y; }
  friend QuadExtElem operator/(QuadExtElem x, const QuadExtElem& y) { return x /= y; }
  friend bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.t_ == y.t_);
  }

  QuadExtElem inverse() const;
  QuadExtElem pow(int e) const;

  /// Canonical text: "p/q", "p/q*sqrt(t)", "p/q+r/s*sqrt(t)".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "sqrt(t)" and "-sqrt(t)" terms.
  static QuadExtElem parse(std::string_view text);

  /// Deterministic (non-field) total order used for tie-breaking.
  friend bool lex_less(const QuadExtElem& x, const QuadExtElem& y);

 private:
  void absorb_radicand(const QuadExtElem& o);
  Rational a_;
  Rational b_;
  Integer t_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadExtElem& x);
bool lex_less(const QuadExtElem& x, const QuadExtElem& y);

/// Common radicand of a set of elements (1 if all rational). Throws
/// std::domain_error if two different extensions occur.
Integer common_radicand(const std::vector<QuadExtElem>& xs);

/// Half the p-adic valuation of the norm. For p ramified or inert in
/// Q(sqrt t) this is the normalized valuation of the unique prime above p;
/// for split p it is the average over the two primes above p.
Valuation val_ext(const QuadExtElem& x, const Prime& p);

/// x is integral at every prime above p (trace and norm are p-integral).
bool is_integral_at(const QuadExtElem& x, const Prime& p);
/// x is an algebraic integer.
bool is_algebraic_integer(const QuadExtElem& x);

}  // namespace grd
