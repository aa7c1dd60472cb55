#include "grd/ratmap.hpp"

#include <stdexcept>

namespace grd {

// --------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(Coeff x, Coeff y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.is_zero() && y_.is_zero()) throw std::invalid_argument("(0:0) is not a point");
}

Coeff ProjPoint::value() const {
  if (is_infinity()) throw std::domain_error("affine value of infinity");
  return x_ / y_;
}

bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.x_ * q.y_ == p.y_ * q.x_; }

std::string ProjPoint::to_string() const { return is_infinity() ? "inf" : value().to_string(); }

// ----------------------------------------------------------------- Moebius

Moebius::Moebius(Coeff a, Coeff b, Coeff c, Coeff d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw std::invalid_argument("degenerate Moebius transformation");
}

ProjPoint Moebius::apply(const ProjPoint& p) const {
  return ProjPoint(a_ * p.x() + b_ * p.y(), c_ * p.x() + d_ * p.y());
}

bool Moebius::same_as(const Moebius& o) const {
  const std::array<const Coeff*, 4> x{&a_, &b_, &c_, &d_};
  const std::array<const Coeff*, 4> y{&o.a_, &o.b_, &o.c_, &o.d_};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (*x[i] * *y[j] != *x[j] * *y[i]) return false;
    }
  }
  return true;
}

namespace {

// Appends "coef*var" to out with sign handling; compound coefficients get
// parentheses.
void append_term(std::string& out, const Coeff& coef, const std::string& var) {
  if (coef.is_zero()) return;
  const bool compound = !coef.is_rational() && !coef.a().is_zero();
  std::string text;
  bool negative = false;
  if (compound) {
    text = "(" + coef.to_string() + ")";
  } else {
    const Coeff mag = (coef.is_rational() ? coef.a().sign() : coef.b().sign()) < 0 ? -coef : coef;
    negative = !(mag == coef);
    text = mag.to_string();
    if (!var.empty() && mag == Coeff(1)) text.clear();
  }
  if (!var.empty()) text = text.empty() ? var : text + "*" + var;
  if (negative) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  out += text;
}

}  // namespace

std::string format_form(const QuadForm& q) {
  std::string out;
  append_term(out, q[0], "z^2");
  append_term(out, q[1], "z");
  append_term(out, q[2], "");
  return out.empty() ? "0" : out;
}

std::string Moebius::to_string() const {
  std::string num;
  append_term(num, a_, "z");
  append_term(num, b_, "");
  std::string den;
  append_term(den, c_, "z");
  append_term(den, d_, "");
  if (num.empty()) num = "0";
  if (den == "1") return num;
  return "(" + num + ")/(" + den + ")";
}

Moebius compose(const Moebius& f, const Moebius& g) {
  return Moebius(f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
                 f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d());
}

// ----------------------------------------------------------------- RatMap2

RatMap2::RatMap2(QuadForm f, QuadForm g) : f_(std::move(f)), g_(std::move(g)) {
  if (resultant(f_, g_).is_zero()) throw std::invalid_argument("forms share a root; map has degree < 2");
}

Poly RatMap2::numerator() const { return Poly({f_[2], f_[1], f_[0]}); }
Poly RatMap2::denominator() const { return Poly({g_[2], g_[1], g_[0]}); }

namespace {

Coeff eval_form(const QuadForm& q, const Coeff& x, const Coeff& y) {
  return q[0] * x * x + q[1] * x * y + q[2] * y * y;
}

// q(aX + bY, cX + dY)
QuadForm substitute(const QuadForm& q, const Moebius& m) {
  const Coeff &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  return {q[0] * a * a + q[1] * a * c + q[2] * c * c,
          q[0] * Coeff(2) * a * b + q[1] * (a * d + b * c) + q[2] * Coeff(2) * c * d,
          q[0] * b * b + q[1] * b * d + q[2] * d * d};
}

QuadForm combine(const Coeff& s, const QuadForm& x, const Coeff& t, const QuadForm& y) {
  return {s * x[0] + t * y[0], s * x[1] + t * y[1], s * x[2] + t * y[2]};
}

}  // namespace

ProjPoint RatMap2::apply(const ProjPoint& p) const {
  return ProjPoint(eval_form(f_, p.x(), p.y()), eval_form(g_, p.x(), p.y()));
}

bool RatMap2::is_rational() const {
  for (const auto* q : {&f_, &g_}) {
    for (const auto& c : *q) {
      if (!c.is_rational()) return false;
    }
  }
  return true;
}

Integer RatMap2::radicand() const {
  return common_radicand({f_[0], f_[1], f_[2], g_[0], g_[1], g_[2]});
}

std::string RatMap2::to_string() const {
  const std::string num = format_form(f_);
  const std::string den = format_form(g_);
  if (den == "1") return num;
  return "(" + num + ")/(" + den + ")";
}

RatMap2 RatMap2::scaled(const Coeff& s) const {
  if (s.is_zero()) throw std::invalid_argument("scaling a map by zero");
  return RatMap2({s * f_[0], s * f_[1], s * f_[2]}, {s * g_[0], s * g_[1], s * g_[2]});
}

Coeff resultant(const QuadForm& f, const QuadForm& g) {
  return sylvester_resultant(Poly({f[2], f[1], f[0]}), 2, Poly({g[2], g[1], g[0]}), 2);
}

Coeff resultant(const RatMap2& m) { return resultant(m.f(), m.g()); }

Coeff resultant_by_formula(const QuadForm& f, const QuadForm& g) {
  const Coeff u = f[0] * g[2] - f[2] * g[0];
  return u * u - (f[0] * g[1] - f[1] * g[0]) * (f[1] * g[2] - f[2] * g[1]);
}

RatMap2 conjugate(const RatMap2& m, const Moebius& f) {
  const QuadForm fm = substitute(m.f(), f);
  const QuadForm gm = substitute(m.g(), f);
  // f^{-1} has matrix (d, -b; -c, a).
  return RatMap2(combine(f.d(), fm, -f.b(), gm), combine(-f.c(), fm, f.a(), gm));
}

ContentSplit split_content(const RatMap2& m) {
  std::array<Coeff, 6> c{m.f()[0], m.f()[1], m.f()[2], m.g()[0], m.g()[1], m.g()[2]};
  const Integer t = common_radicand({c.begin(), c.end()});
  Coeff content(1);

  auto extract_rational = [&]() {
    Integer den_lcm = 1;
    for (const auto& x : c) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.a().den().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.b().den().get_mpz_t());
    }
    Integer num_gcd = 0;
    for (const auto& x : c) {
      const Rational sa = x.a() * Rational(den_lcm);
      const Rational sb = x.b() * Rational(den_lcm);
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), sa.num().get_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), sb.num().get_mpz_t());
    }
    const Rational k(num_gcd, den_lcm);
    for (auto& x : c) x /= Coeff(k);
    content *= Coeff(k);
  };

  extract_rational();
  if (abs(t) != 1) {
    // Pull out the ramified factor sqrt(t) while every a-part is divisible by t.
    while (true) {
      bool divisible = true;
      for (const auto& x : c) {
        if (x.a().num() % t != 0) divisible = false;
      }
      if (!divisible) break;
      const Coeff root_t = QuadExtElem::sqrt_of(Rational(t));
      for (auto& x : c) x /= root_t;
      content *= root_t;
      extract_rational();
    }
  }
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    const int s = x.a().is_zero() ? x.b().sign() : x.a().sign();
    if (s < 0) {
      for (auto& y : c) y = -y;
      content = -content;
    }
    break;
  }
  return {content, RatMap2({c[0], c[1], c[2]}, {c[3], c[4], c[5]})};
}

RatMap2 normalize_content(const RatMap2& m) { return split_content(m).primitive; }

bool same_map(const RatMap2& x, const RatMap2& y) {
  // Proportional coefficient vectors; content normalization is only
  // canonical up to units of the ring, so compare cross products instead.
  const std::array<const Coeff*, 6> a{&x.f()[0], &x.f()[1], &x.f()[2], &x.g()[0], &x.g()[1], &x.g()[2]};
  const std::array<const Coeff*, 6> b{&y.f()[0], &y.f()[1], &y.f()[2], &y.g()[0], &y.g()[1], &y.g()[2]};
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (!(*a[i] * *b[j] == *a[j] * *b[i])) return false;
    }
  }
  return true;
}

bool good_reduction_at(const RatMap2& m, const Prime& p) {
  return val_ext(resultant(normalize_content(m)), p) == Valuation::finite(Rational(0));
}

namespace {

// Dense polynomials over F_p, constant term first.
using ModPoly = std::vector<Integer>;

void mod_trim(ModPoly& x) {
  while (!x.empty() && x.back() == 0) x.pop_back();
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, const Integer& p) {
  Integer inv;
  mpz_invert(inv.get_mpz_t(), Integer(b.back()).get_mpz_t(), p.get_mpz_t());
  while (a.size() >= b.size()) {
    const Integer factor = (a.back() * inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      Integer v = (a[shift + i] - factor * b[i]) % p;
      if (v < 0) v += p;
      a[shift + i] = v;
    }
    mod_trim(a);
  }
  return a;
}

int mod_gcd_degree(ModPoly a, ModPoly b, const Integer& p) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

int degree_of_reduction(const RatMap2& m, const Prime& p) {
  if (!m.is_rational()) throw std::domain_error("reduction of extension coefficients is not supported");
  const RatMap2 n = normalize_content(m);
  const Integer& q = p.value();
  auto reduce = [&](const QuadForm& form) {
    std::array<Integer, 3> r;
    for (int i = 0; i < 3; ++i) {
      Integer v = form[i].as_rational().num() % q;
      if (v < 0) v += q;
      r[i] = v;
    }
    return r;
  };
  const auto f = reduce(n.f());
  const auto g = reduce(n.g());
  const bool f_zero = f[0] == 0 && f[1] == 0 && f[2] == 0;
  const bool g_zero = g[0] == 0 && g[1] == 0 && g[2] == 0;
  if (f_zero || g_zero) return -1;
  // Common power of Y (roots at infinity), then finite common roots.
  auto y_order = [](const std::array<Integer, 3>& r) { return r[0] != 0 ? 0 : (r[1] != 0 ? 1 : 2); };
  const int common_y = std::min(y_order(f), y_order(g));
  const int finite = mod_gcd_degree({f[2], f[1], f[0]}, {g[2], g[1], g[0]}, q);
  return 2 - common_y - finite;
}

}  // namespace grd
