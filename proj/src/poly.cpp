#include "grd/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace grd {

Poly::Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Coeff c, int degree) {
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Coeff& r) { return Poly({-r, Coeff(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Coeff Poly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Coeff();
  return c_[static_cast<std::size_t>(i)];
}

const Coeff& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Coeff Poly::eval(const Coeff& x) const {
  Coeff acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Coeff> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Coeff(static_cast<long long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return leading().inverse() * *this;
}

Poly Poly::operator-() const {
  std::vector<Coeff> v = c_;
  for (auto& x : v) x = -x;
  return Poly(std::move(v));
}

Poly operator+(const Poly& x, const Poly& y) {
  std::vector<Coeff> v(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < x.c_.size()) v[i] += x.c_[i];
    if (i < y.c_.size()) v[i] += y.c_[i];
  }
  return Poly(std::move(v));
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return Poly();
  std::vector<Coeff> v(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) v[i + j] += x.c_[i] * y.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Coeff& s, const Poly& x) {
  std::vector<Coeff> v = x.c_;
  for (auto& c : v) c = s * c;
  return Poly(std::move(v));
}

Poly Poly::pow(int e) const {
  Poly r = Poly::constant(Coeff(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

PolyDivision divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly q;
  Poly r = num;
  const Coeff inv_lead = den.leading().inverse();
  while (!r.is_zero() && r.degree() >= den.degree()) {
    const int shift = r.degree() - den.degree();
    const Poly term = Poly::monomial(r.leading() * inv_lead, shift);
    q = q + term;
    r = r - term * den;
  }
  return {q, r};
}

Poly gcd(const Poly& x, const Poly& y) {
  Poly a = x;
  Poly b = y;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Coeff determinant(std::vector<std::vector<Coeff>> m) {
  const std::size_t n = m.size();
  Coeff det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Coeff();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Coeff inv = m[col][col].inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const Coeff factor = m[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

Coeff sylvester_resultant(const Poly& x, int dx, const Poly& y, int dy) {
  if (x.degree() > dx || y.degree() > dy) throw std::invalid_argument("formal degree below actual degree");
  const int n = dx + dy;
  if (n == 0) return Coeff(1);
  std::vector<std::vector<Coeff>> m(static_cast<std::size_t>(n), std::vector<Coeff>(static_cast<std::size_t>(n)));
  // Rows hold coefficients from the highest formal degree downward.
  for (int r = 0; r < dy; ++r) {
    for (int i = 0; i <= dx; ++i) m[r][r + i] = x[dx - i];
  }
  for (int r = 0; r < dx; ++r) {
    for (int i = 0; i <= dy; ++i) m[dy + r][r + i] = y[dy - i];
  }
  return determinant(std::move(m));
}

namespace {

// Square-free rational polynomial with integer-scaled evaluation helpers.
struct RationalPoly {
  std::vector<Rational> c;  // constant term first

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rational eval(const Rational& x) const {
    Rational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

RationalPoly to_rational(const Poly& p) {
  RationalPoly r;
  for (const auto& x : p.coeffs()) r.c.push_back(x.as_rational());
  return r;
}

struct FoundRoot {
  Rational root;
};

class SturmIsolator {
 public:
  explicit SturmIsolator(const Poly& squarefree) {
    chain_.push_back(to_rational(squarefree));
    chain_.push_back(to_rational(squarefree.derivative()));
    Poly a = squarefree;
    Poly b = squarefree.derivative();
    while (b.degree() > 0) {
      Poly r = -divmod(a, b).remainder;
      if (r.is_zero()) break;
      chain_.push_back(to_rational(r));
      a = std::move(b);
      b = std::move(r);
    }
    // Denominator multiple: every rational root has the form k / scale.
    Integer den_lcm = 1;
    for (const auto& x : chain_[0].c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
    scale_ = abs((chain_[0].c.back() * Rational(den_lcm)).num());
    Rational bound(0);
    for (const auto& x : chain_[0].c) bound = std::max(bound, (x / chain_[0].c.back()).abs());
    bound_ = bound + Rational(1);
  }

  // Throws FoundRoot when a subdivision point happens to be a root.
  void run(std::vector<Rational>& out) const {
    isolate(-bound_, bound_, variations(-bound_) - variations(bound_), out);
  }

 private:
  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = p.eval(x).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  const RationalPoly& base() const { return chain_.front(); }

  void isolate(const Rational& lo, const Rational& hi, int count, std::vector<Rational>& out) const {
    if (count <= 0) return;
    if (count == 1) {
      refine(lo, hi, out);
      return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    if (base().eval(mid).is_zero()) throw FoundRoot{mid};
    const int left = variations(lo) - variations(mid);
    isolate(lo, mid, left, out);
    isolate(mid, hi, count - left, out);
  }

  void refine(Rational lo, Rational hi, std::vector<Rational>& out) const {
    const Rational width_target = Rational(1) / Rational(scale_);
    int lo_sign = base().eval(lo).sign();
    while (hi - lo >= width_target) {
      const Rational mid = (lo + hi) / Rational(2);
      const int s = base().eval(mid).sign();
      if (s == 0) {
        out.push_back(mid);
        return;
      }
      if (s == lo_sign) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    Integer k_lo, k_hi;
    const Rational lo_scaled = lo * Rational(scale_);
    const Rational hi_scaled = hi * Rational(scale_);
    mpz_cdiv_q(k_lo.get_mpz_t(), lo_scaled.num().get_mpz_t(), lo_scaled.den().get_mpz_t());
    mpz_fdiv_q(k_hi.get_mpz_t(), hi_scaled.num().get_mpz_t(), hi_scaled.den().get_mpz_t());
    for (Integer k = k_lo; k <= k_hi; ++k) {
      const Rational cand(k, scale_);
      if (cand > lo && base().eval(cand).is_zero()) {
        out.push_back(cand);
        return;
      }
    }
  }

  std::vector<RationalPoly> chain_;
  Integer scale_;
  Rational bound_;
};

std::vector<Rational> distinct_rational_roots(Poly squarefree) {
  std::vector<Rational> found;
  while (squarefree.degree() >= 1) {
    if (squarefree.degree() == 1) {
      found.push_back((-squarefree[0] / squarefree[1]).as_rational());
      break;
    }
    try {
      std::vector<Rational> out;
      SturmIsolator(squarefree).run(out);
      found.insert(found.end(), out.begin(), out.end());
      break;
    } catch (const FoundRoot& hit) {
      found.push_back(hit.root);
      squarefree = divmod(squarefree, Poly::linear_root(Coeff(hit.root))).quotient;
    }
  }
  return found;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  for (const auto& c : p.coeffs()) {
    if (!c.is_rational()) throw std::invalid_argument("rational_roots needs rational coefficients");
  }
  Poly rest = p;
  std::vector<Rational> roots;
  while (rest.degree() >= 1 && rest[0].is_zero()) {
    roots.emplace_back(0);
    rest = divmod(rest, Poly::linear_root(Coeff())).quotient;
  }
  if (rest.degree() < 1) return roots;
  const Poly g = gcd(rest, rest.derivative());
  const Poly squarefree = divmod(rest, g).quotient;
  for (const auto& r : distinct_rational_roots(squarefree)) {
    const Poly lin = Poly::linear_root(Coeff(r));
    while (true) {
      auto div = divmod(rest, lin);
      if (!div.remainder.is_zero()) break;
      roots.push_back(r);
      rest = std::move(div.quotient);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::vector<Coeff>> roots_over_quadratic(const Poly& p) {
  std::vector<Coeff> out;
  Poly rest = p;
  for (const auto& r : rational_roots(p)) {
    out.emplace_back(r);
    rest = divmod(rest, Poly::linear_root(Coeff(r))).quotient;
  }
  if (rest.degree() <= 0) return out;
  if (rest.degree() != 2) return std::nullopt;
  const Rational a = rest[2].as_rational();
  const Rational b = rest[1].as_rational();
  const Rational c = rest[0].as_rational();
  const QuadExtElem root_disc = QuadExtElem::sqrt_of(b * b - Rational(4) * a * c);
  const Coeff two_a(a * Rational(2));
  out.push_back((Coeff(-b) - root_disc) / two_a);
  out.push_back((Coeff(-b) + root_disc) / two_a);
  return out;
}

}  // namespace grd
