#include "grd/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace grd {

std::string to_string(const Integer& n) { return n.get_str(); }

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [](std::string_view s) {
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    if (str.empty() || str == "-") throw std::invalid_argument("malformed integer");
    for (std::size_t i = (str.front() == '-') ? 1 : 0; i < str.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(str[i])))
        throw std::invalid_argument("malformed integer '" + str + "'");
    }
    return Integer(str, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }
Rational& Rational::operator+=(const Rational& o) { q_ += o.q_; return *this; }
Rational& Rational::operator-=(const Rational& o) { q_ -= o.q_; return *this; }
Rational& Rational::operator*=(const Rational& o) { q_ *= o.q_; return *this; }
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

// ------------------------------------------------------------------- Prime

namespace {

bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n1 = n - 1;
  if (x == 1 || x == n1) return false;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr int kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (int q : kSmall) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Miller-Rabin with the first 13 prime bases is deterministic below 3.3e24.
  static const Integer kDeterministicBound("3317044064679887385961981", 10);
  if (n < kDeterministicBound) {
    Integer d = n - 1;
    unsigned long s = 0;
    while (d % 2 == 0) {
      d /= 2;
      ++s;
    }
    for (int q : kSmall) {
      if (miller_rabin_witness(n, Integer(q), d, s)) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Prime::Prime(const Integer& value) : p_(value) {
  if (!is_prime(value)) throw std::invalid_argument(value.get_str() + " is not prime");
}

// --------------------------------------------------------------- Valuation

const Rational& Valuation::value() const {
  if (infinite_) throw std::logic_error("valuation of zero is infinite");
  return value_;
}

Valuation operator+(const Valuation& x, const Valuation& y) {
  if (x.infinite_ || y.infinite_) return Valuation::infinity();
  return Valuation::finite(x.value_ + y.value_);
}

bool operator==(const Valuation& x, const Valuation& y) {
  if (x.infinite_ || y.infinite_) return x.infinite_ == y.infinite_;
  return x.value_ == y.value_;
}

std::strong_ordering operator<=>(const Valuation& x, const Valuation& y) {
  if (x.infinite_ && y.infinite_) return std::strong_ordering::equal;
  if (x.infinite_) return std::strong_ordering::greater;
  if (y.infinite_) return std::strong_ordering::less;
  return x.value_ <=> y.value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : value_.to_string(); }

Valuation min(const Valuation& x, const Valuation& y) { return (y < x) ? y : x; }

long val_p_int(const Integer& n, const Prime& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.value().get_mpz_t()));
}

Valuation val_p(const Rational& x, const Prime& p) {
  if (x.is_zero()) return Valuation::infinity();
  return Valuation::finite(Rational(val_p_int(x.num(), p) - val_p_int(x.den(), p)));
}

std::optional<Rational> sqrt_rational(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("square root of a negative rational");
  const Integer n = x.num();
  const Integer d = x.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

namespace {

// Pollard rho, Brent's variant. n is odd, composite and not a prime power.
Integer rho_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const unsigned long block = 128;
    auto step = [&](Integer& v) { v = (v * v + c) % n; };
    for (unsigned long r = 1; g == 1; r *= 2) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
          step(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      // Back up one step at a time from the last block.
      do {
        step(ys);
        const Integer diff = abs(Integer(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::map<Integer, long>& acc, long mult) {
  if (n == 1) return;
  if (is_prime(n)) {
    acc[n] += mult;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        split_into(root, acc, mult * static_cast<long>(k));
        return;
      }
    }
  }
  const Integer d = rho_factor(n);
  split_into(d, acc, mult);
  split_into(n / d, acc, mult);
}

}  // namespace

std::vector<std::pair<Prime, long>> factor_integer(const Integer& n) {
  if (n == 0) throw std::invalid_argument("cannot factor zero");
  std::map<Integer, long> acc;
  Integer m = abs(n);
  auto take = [&](unsigned long q) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      m /= q;
      ++acc[Integer(q)];
    }
  };
  take(2);
  take(3);
  for (unsigned long q = 5; q < 10000 && Integer(q) * q <= m; q += 6) {
    take(q);
    take(q + 2);
  }
  if (m > 1 && Integer(10000) * 10000 > m) {
    ++acc[m];
  } else {
    split_into(m, acc, 1);
  }
  std::vector<std::pair<Prime, long>> out;
  for (const auto& [p, e] : acc) out.emplace_back(Prime(p), e);
  return out;
}

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n == 0) throw std::invalid_argument("squarefree part of zero");
  Integer s = 1;
  Integer r = (n < 0) ? -1 : 1;
  for (const auto& [p, e] : factor_integer(n)) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.value().get_mpz_t(), static_cast<unsigned long>(e / 2));
    s *= pk;
    if (e % 2 == 1) r *= p.value();
  }
  return {s, r};
}

// ------------------------------------------------------------- QuadExtElem

QuadExtElem::QuadExtElem(Rational a, Rational b, const Rational& t) : a_(std::move(a)), b_(std::move(b)) {
  if (t.is_zero()) throw std::invalid_argument("radicand must be nonzero");
  // sqrt(u/v) = sqrt(u v) / v
  const Integer uv = t.num() * t.den();
  const auto split = squarefree_split(uv);
  if (split.squarefree == 1) throw std::invalid_argument("radicand " + t.to_string() + " is a rational square");
  b_ *= Rational(split.square_root_part, t.den());
  t_ = split.squarefree;
  if (b_.is_zero()) t_ = 1;
}

QuadExtElem QuadExtElem::sqrt_of(const Rational& x) {
  if (x.is_zero()) return QuadExtElem();
  if (x.sign() > 0) {
    if (auto r = sqrt_rational(x)) return QuadExtElem(*r);
  }
  return QuadExtElem(Rational(0), Rational(1), x);
}

const Rational& QuadExtElem::as_rational() const {
  if (!is_rational()) throw std::domain_error(to_string() + " is not rational");
  return a_;
}

Rational QuadExtElem::norm() const { return a_ * a_ - Rational(t_) * b_ * b_; }
Rational QuadExtElem::trace() const { return a_ + a_; }

QuadExtElem QuadExtElem::conj() const {
  QuadExtElem r = *this;
  r.b_ = -r.b_;
  return r;
}

void QuadExtElem::absorb_radicand(const QuadExtElem& o) {
  if (o.b_.is_zero()) return;
  if (b_.is_zero()) {
    t_ = o.t_;
    return;
  }
  if (t_ != o.t_) {
    throw std::domain_error("cannot mix Q(sqrt(" + t_.get_str() + ")) and Q(sqrt(" + o.t_.get_str() + "))");
  }
}

QuadExtElem QuadExtElem::operator-() const {
  QuadExtElem r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExtElem& QuadExtElem::operator+=(const QuadExtElem& o) {
  absorb_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_.is_zero()) t_ = 1;
  return *this;
}

QuadExtElem& QuadExtElem::operator-=(const QuadExtElem& o) {
  absorb_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_.is_zero()) t_ = 1;
  return *this;
}

QuadExtElem& QuadExtElem::operator*=(const QuadExtElem& o) {
  absorb_radicand(o);
  const Rational t(t_);
  Rational na = a_ * o.a_ + t * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  if (b_.is_zero()) t_ = 1;
  return *this;
}

QuadExtElem QuadExtElem::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  QuadExtElem r = conj();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

QuadExtElem& QuadExtElem::operator/=(const QuadExtElem& o) { return *this *= o.inverse(); }

QuadExtElem QuadExtElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QuadExtElem result(1);
  QuadExtElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string QuadExtElem::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string radical = "sqrt(" + t_.get_str() + ")";
  std::string bpart;
  if (b_ == Rational(1)) {
    bpart = radical;
  } else if (b_ == Rational(-1)) {
    bpart = "-" + radical;
  } else {
    bpart = b_.to_string() + "*" + radical;
  }
  if (a_.is_zero()) return bpart;
  return a_.to_string() + (b_.sign() > 0 ? "+" : "") + bpart;
}

QuadExtElem QuadExtElem::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  const auto sq = s.find("sqrt(");
  if (sq == std::string::npos) return QuadExtElem(Rational::parse(s));
  const auto close = s.find(')', sq);
  if (close == std::string::npos || close + 1 != s.size()) throw std::invalid_argument("malformed element '" + s + "'");
  const Rational t = Rational::parse(s.substr(sq + 5, close - sq - 5));
  // Split "<a><sign><b>*sqrt(t)" at the sign that starts the radical term.
  std::string head = s.substr(0, sq);
  if (!head.empty() && head.back() == '*') head.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  Rational a(0);
  std::string coeff = head;
  if (split != std::string::npos) {
    a = Rational::parse(head.substr(0, split));
    coeff = head.substr(split);
  }
  Rational b;
  if (coeff.empty() || coeff == "+") {
    b = Rational(1);
  } else if (coeff == "-") {
    b = Rational(-1);
  } else {
    b = Rational::parse(coeff);
  }
  auto sroot = t.sign() > 0 ? sqrt_rational(t) : std::nullopt;
  if (sroot) return QuadExtElem(a + b * *sroot);
  return QuadExtElem(a, b, t);
}

bool lex_less(const QuadExtElem& x, const QuadExtElem& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_;
  if (x.b_ != y.b_) return x.b_ < y.b_;
  return x.t_ < y.t_;
}

std::ostream& operator<<(std::ostream& os, const QuadExtElem& x) { return os << x.to_string(); }

Integer common_radicand(const std::vector<QuadExtElem>& xs) {
  Integer t = 1;
  for (const auto& x : xs) {
    if (x.is_rational()) continue;
    if (t == 1) {
      t = x.t();
    } else if (t != x.t()) {
      throw std::domain_error("elements live in different quadratic extensions");
    }
  }
  return t;
}

Valuation val_ext(const QuadExtElem& x, const Prime& p) {
  if (x.is_rational()) return val_p(x.a(), p);
  const Valuation vn = val_p(x.norm(), p);
  if (vn.is_infinite()) return vn;
  return Valuation::finite(vn.value() / Rational(2));
}

bool is_integral_at(const QuadExtElem& x, const Prime& p) {
  const Valuation zero = Valuation::finite(Rational(0));
  if (x.is_rational()) return val_p(x.a(), p) >= zero;
  return val_p(x.trace(), p) >= zero && val_p(x.norm(), p) >= zero;
}

bool is_algebraic_integer(const QuadExtElem& x) {
  if (x.is_rational()) return x.a().is_integer();
  return x.trace().is_integer() && x.norm().is_integer();
}

}  // namespace grd
