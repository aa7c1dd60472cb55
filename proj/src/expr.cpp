#include "grd/expr.hpp"

#include <cctype>

namespace grd {

namespace {

constexpr int kMaxExponent = 64;
constexpr int kMaxDegree = 256;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RationalFunction run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    RationalFunction r = expr();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // U+2212 minus sign is accepted as '-'.
  bool peek_minus() const {
    return pos_ + 3 <= s_.size() && s_.compare(pos_, 3, "\xE2\x88\x92") == 0;
  }

  char peek() {
    skip();
    if (pos_ >= s_.size()) return '\0';
    if (peek_minus()) return '-';
    return s_[pos_];
  }

  void advance() { pos_ += peek_minus() ? 3 : 1; }

  static RationalFunction add(const RationalFunction& x, const RationalFunction& y, bool subtract) {
    Poly a = x.num * y.den;
    Poly b = y.num * x.den;
    return {subtract ? a - b : a + b, x.den * y.den};
  }

  RationalFunction divide(const RationalFunction& x, const RationalFunction& y, std::size_t at) {
    if (y.num.is_zero()) throw ParseError("division by zero", at);
    return {x.num * y.den, x.den * y.num};
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      advance();
      acc = add(acc, term(), c == '-');
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      const char c = peek();
      if (c != '*' && c != '/') return acc;
      const std::size_t at = pos_;
      advance();
      RationalFunction rhs = unary();
      acc = c == '*' ? RationalFunction{acc.num * rhs.num, acc.den * rhs.den} : divide(acc, rhs, at);
    }
  }

  RationalFunction unary() {
    const char c = peek();
    if (c == '+' || c == '-') {
      advance();
      RationalFunction r = unary();
      if (c == '-') r.num = -r.num;
      return r;
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (peek() != '^') return base;
    advance();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
    }
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError("expected integer exponent", pos_);
    }
    const Integer e = integer();
    if (e > kMaxExponent) throw ParseError("exponent too large", at);
    const int n = static_cast<int>(e.get_si());
    if (std::max(base.num.degree(), base.den.degree()) * n > kMaxDegree) throw ParseError("degree too large", at);
    if (negative) {
      if (base.num.is_zero()) throw ParseError("zero to a negative power", at);
      std::swap(base.num, base.den);
    }
    return {base.num.pow(n), base.den.pow(n)};
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  RationalFunction atom() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (c == '(') {
      advance();
      RationalFunction r = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      advance();
      return r;
    }
    if (c == 'z') {
      advance();
      return {Poly({Coeff(0), Coeff(1)}), Poly::constant(Coeff(1))};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return {Poly::constant(Coeff(Rational(integer()))), Poly::constant(Coeff(1))};
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text).run(); }

RatMap2 parse_map(std::string_view text) {
  RationalFunction r = parse_rational_function(text);
  if (r.num.is_zero()) throw std::invalid_argument("map is identically zero");
  const Poly common = gcd(r.num, r.den);
  Poly num = divmod(r.num, common).quotient;
  Poly den = divmod(r.den, common).quotient;
  const int degree = std::max(num.degree(), den.degree());
  if (degree != 2) throw std::invalid_argument("degree " + std::to_string(degree) + " after cancellation; expected 2");
  if (den.degree() == 0) {
    const Coeff s = den[0].inverse();
    num = s * num;
    den = Poly::constant(Coeff(1));
  }
  return RatMap2({num[2], num[1], num[0]}, {den[2], den[1], den[0]});
}

}  // namespace grd
