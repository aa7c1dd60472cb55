#include "grd/invariants.hpp"

#include <algorithm>
#include <set>

namespace grd {

CubicForm fixed_point_form(const RatMap2& m) {
  const auto& f = m.f();
  const auto& g = m.g();
  CubicForm phi{g[0], g[1] - f[0], g[2] - f[1], -f[2]};
  if (std::all_of(phi.begin(), phi.end(), [](const Coeff& c) { return c.is_zero(); })) {
    throw std::invalid_argument("map is the identity; fixed-point form vanishes");
  }
  return phi;
}

namespace {

Poly affine_cubic(const CubicForm& phi) { return Poly({phi[3], phi[2], phi[1], phi[0]}); }

Coeff eval_cubic(const CubicForm& phi, const Coeff& x, const Coeff& y) {
  return phi[0] * x * x * x + phi[1] * x * x * y + phi[2] * x * y * y + phi[3] * y * y * y;
}

// Affine multiplier W(a) / G(a)^2 at a finite fixed point.
Coeff finite_multiplier(const RatMap2& m, const Coeff& alpha) {
  const Poly f = m.numerator();
  const Poly g = m.denominator();
  const Coeff ga = g.eval(alpha);
  if (ga.is_zero()) throw std::logic_error("finite fixed point at a pole");
  const Coeff w = f.derivative().eval(alpha) * ga - f.eval(alpha) * g.derivative().eval(alpha);
  return w / (ga * ga);
}

}  // namespace

std::optional<std::vector<FixedPoint>> fixed_points(const RatMap2& m) {
  if (!m.is_rational()) return std::nullopt;
  const CubicForm phi = fixed_point_form(m);
  const Poly affine = affine_cubic(phi);
  const auto roots = roots_over_quadratic(affine);
  if (!roots) return std::nullopt;
  std::vector<FixedPoint> out;
  for (const auto& r : *roots) {
    auto it = std::find_if(out.begin(), out.end(), [&](const FixedPoint& fp) { return fp.point == ProjPoint::affine(r); });
    if (it != out.end()) {
      ++it->multiplicity;
    } else {
      out.push_back({ProjPoint::affine(r), 1});
    }
  }
  const int at_infinity = 3 - affine.degree();
  if (at_infinity > 0) out.push_back({ProjPoint::infinity(), at_infinity});
  return out;
}

Coeff multiplier_at(const RatMap2& m, const ProjPoint& p) {
  const CubicForm phi = fixed_point_form(m);
  if (!eval_cubic(phi, p.x(), p.y()).is_zero()) {
    throw std::invalid_argument(p.to_string() + " is not a fixed point");
  }
  if (!p.is_infinity()) return finite_multiplier(m, p.value());
  // The multiplier is coordinate-free: move infinity to 0 with 1/z.
  return finite_multiplier(conjugate(m, Moebius::inversion()), Coeff(0));
}

MultiplierSpectrum sigma_invariants(const RatMap2& m) {
  // Choose coordinates where infinity is not fixed: z -> r + 1/z sends
  // infinity to r, and at most three r are fixed points.
  RatMap2 work = m;
  if (fixed_point_form(work)[0].is_zero()) {
    bool moved = false;
    for (long long r = 0; r <= 3 && !moved; ++r) {
      RatMap2 candidate = conjugate(m, Moebius(Coeff(r), 1, 1, 0));
      if (!fixed_point_form(candidate)[0].is_zero()) {
        work = candidate;
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("no coordinate change removed the fixed point at infinity");
  }
  const Poly phi = affine_cubic(fixed_point_form(work));
  const Poly f = work.numerator();
  const Poly g = work.denominator();
  const Poly w = f.derivative() * g - f * g.derivative();
  const Poly g2 = g * g;
  if (sylvester_resultant(phi, 3, g, 2).is_zero()) throw std::logic_error("fixed point at a pole");

  // R(l) = Res_z(Phi, l*G^2 - W) is a cubic in l; sample and interpolate.
  std::array<Coeff, 4> samples;
  for (int i = 0; i < 4; ++i) {
    samples[i] = sylvester_resultant(phi, 3, Coeff(static_cast<long long>(i)) * g2 - w, 4);
  }
  // Newton forward differences at nodes 0..3, then expand to monomials.
  const Coeff d0 = samples[0];
  const Coeff d1 = samples[1] - samples[0];
  const Coeff d2 = (samples[2] - Coeff(2) * samples[1] + samples[0]) / Coeff(2);
  const Coeff d3 = (samples[3] - Coeff(3) * samples[2] + Coeff(3) * samples[1] - samples[0]) / Coeff(6);
  // R = d0 + d1 l + d2 l(l-1) + d3 l(l-1)(l-2)
  const Coeff r3 = d3;
  const Coeff r2 = d2 - Coeff(3) * d3;
  const Coeff r1 = d1 - d2 + Coeff(2) * d3;
  const Coeff r0 = d0;
  if (r3.is_zero()) throw std::logic_error("multiplier polynomial lost its cubic term");

  MultiplierSpectrum s{-r2 / r3, r1 / r3, -r0 / r3, std::nullopt};
  if (s.sigma1.is_rational() && s.sigma2.is_rational() && s.sigma3.is_rational()) {
    s.multipliers = roots_over_quadratic(Poly({-s.sigma3, s.sigma2, -s.sigma1, Coeff(1)}));
  }
  return s;
}

Coeff lambda3_from_pair(const Coeff& lambda1, const Coeff& lambda2) {
  const Coeff den = Coeff(1) - lambda1 * lambda2;
  if (den.is_zero()) throw std::invalid_argument("lambda1 * lambda2 = 1; third multiplier is not determined");
  return (Coeff(2) - lambda1 - lambda2) / den;
}

bool is_integral_point(const MultiplierSpectrum& s, const std::optional<Prime>& p) {
  if (p) return is_integral_at(s.sigma1, *p) && is_integral_at(s.sigma2, *p);
  return is_algebraic_integer(s.sigma1) && is_algebraic_integer(s.sigma2);
}

std::vector<Prime> non_integral_primes(const MultiplierSpectrum& s) {
  std::set<Prime> out;
  for (const auto* x : {&s.sigma1, &s.sigma2}) {
    for (const Rational& r : {x->trace(), x->norm()}) {
      if (r.den() == 1) continue;
      for (const auto& [p, e] : factor_integer(r.den())) {
        (void)e;
        out.insert(p);
      }
    }
  }
  std::vector<Prime> v;
  for (const auto& p : out) {
    if (!is_integral_point(s, p)) v.push_back(p);
  }
  return v;
}

RatMap2 form_a_map(const Coeff& lambda1, const Coeff& lambda2) {
  return RatMap2({Coeff(1), lambda1, Coeff(0)}, {Coeff(0), lambda2, Coeff(1)});
}

RatMap2 form_b_map(const Coeff& sqrt_term) {
  return RatMap2({Coeff(1), sqrt_term, Coeff(1)}, {Coeff(0), Coeff(1), Coeff(0)});
}

namespace {

Integer radicand_of(std::initializer_list<Coeff> xs) { return common_radicand(std::vector<Coeff>(xs)); }

// Ordering key for fixed points: finite before infinity, then lexicographic.
bool point_less(const ProjPoint& x, const ProjPoint& y) {
  if (x.is_infinity() != y.is_infinity()) return y.is_infinity();
  if (x.is_infinity()) return false;
  return lex_less(x.value(), y.value());
}

bool point_rational(const ProjPoint& x) { return x.is_infinity() || x.value().is_rational(); }

std::optional<NormalForm> already_form_a(const RatMap2& m) {
  const auto& f = m.f();
  const auto& g = m.g();
  if (!f[2].is_zero() || !g[0].is_zero() || f[0].is_zero() || !(f[0] == g[2])) return std::nullopt;
  const Coeff l1 = f[1] / f[0];
  const Coeff l2 = g[1] / f[0];
  if (l1 * l2 == Coeff(1)) return std::nullopt;
  return NormalForm{NormalForm::Kind::FormA, l1, l2, lambda3_from_pair(l1, l2), Coeff(),
                    Moebius::identity(), form_a_map(l1, l2), Integer(1)};
}

NormalForm build_form_b(const RatMap2& m, const FixedPoint& doubled, const std::optional<FixedPoint>& simple) {
  // Send the multiplier-1 double fixed point to infinity.
  const ProjPoint& alpha = doubled.point;
  const Moebius h1 = alpha.is_infinity() ? Moebius::identity() : Moebius(alpha.value(), 1, 1, 0);
  const RatMap2 psi = conjugate(m, h1);
  // psi = (g1 z^2 + f1 z + f0) / (g1 z + g0) = z + r + k/(z + q) after dividing by g1.
  const Coeff lead = psi.g()[1];
  const Coeff f1 = psi.f()[1] / lead;
  const Coeff f0 = psi.f()[2] / lead;
  const Coeff q = psi.g()[2] / lead;
  const Coeff r = f1 - q;
  const Coeff k = f0 - q * r;
  if (!psi.g()[0].is_zero() || !(psi.f()[0] == lead) || k.is_zero()) {
    throw std::logic_error("double fixed point at infinity has unexpected shape");
  }
  const Moebius h2 = Moebius::translation(-q);
  const Coeff mu = QuadExtElem::sqrt_of(k.as_rational());
  const Moebius h3 = Moebius::scaling(mu);
  const Coeff s = r / mu;
  const Moebius total = compose(compose(h1, h2), h3);
  const RatMap2 model = form_b_map(s);
  if (!same_map(conjugate(m, total), model)) throw std::logic_error("form B conjugation mismatch");

  const Coeff lambda3 = simple ? multiplier_at(m, simple->point) : Coeff(1);
  if (!(s * s == Coeff(1) - lambda3)) throw std::logic_error("form B constant does not square to 1 - lambda3");
  return NormalForm{NormalForm::Kind::FormB, Coeff(1), Coeff(1), lambda3, s, total, model,
                    radicand_of({total.a(), total.b(), total.c(), total.d(), s})};
}

NormalForm build_form_a(const RatMap2& m, const FixedPoint& zero_pt, const FixedPoint& inf_pt) {
  const ProjPoint& p1 = zero_pt.point;
  const ProjPoint& p2 = inf_pt.point;
  const Coeff l1 = multiplier_at(m, p1);
  const Coeff l2 = multiplier_at(m, p2);
  // h(0) = p1, h(inf) = p2.
  const Moebius h(p2.x(), p1.x(), p2.y(), p1.y());
  const RatMap2 psi = conjugate(m, h);
  const Coeff u = psi.g()[2] / psi.f()[0];
  const Moebius total = compose(h, Moebius::scaling(u));
  const RatMap2 model = form_a_map(l1, l2);
  if (!same_map(conjugate(m, total), model)) throw std::logic_error("form A conjugation mismatch");
  return NormalForm{NormalForm::Kind::FormA, l1, l2, lambda3_from_pair(l1, l2), Coeff(), total, model,
                    radicand_of({total.a(), total.b(), total.c(), total.d(), l1, l2})};
}

}  // namespace

NormalForm to_normal_form(const RatMap2& input) {
  if (!input.is_rational()) throw NotConstructible("normal forms are built for maps over Q");
  const RatMap2 m = normalize_content(input);
  if (auto nf = already_form_a(m)) return *nf;

  auto fps = fixed_points(m);
  if (!fps) throw NotConstructible("fixed points do not lie in a single quadratic extension");
  std::sort(fps->begin(), fps->end(), [](const FixedPoint& x, const FixedPoint& y) { return point_less(x.point, y.point); });

  for (const auto& fp : *fps) {
    if (fp.multiplicity >= 2) {
      std::optional<FixedPoint> simple;
      for (const auto& other : *fps) {
        if (other.multiplicity == 1) simple = other;
      }
      return build_form_b(m, fp, simple);
    }
  }

  // Three simple fixed points: rational pairs first, then lexicographic.
  std::optional<std::pair<std::size_t, std::size_t>> best;
  bool best_rational = false;
  for (std::size_t i = 0; i < fps->size(); ++i) {
    for (std::size_t j = 0; j < fps->size(); ++j) {
      if (i == j) continue;
      const Coeff li = multiplier_at(m, (*fps)[i].point);
      const Coeff lj = multiplier_at(m, (*fps)[j].point);
      if (li * lj == Coeff(1)) continue;
      const bool rational = point_rational((*fps)[i].point) && point_rational((*fps)[j].point);
      if (!best || (rational && !best_rational)) {
        best = {i, j};
        best_rational = rational;
      }
    }
  }
  if (!best) throw std::logic_error("no fixed-point pair with l1 l2 != 1");
  return build_form_a(m, (*fps)[best->first], (*fps)[best->second]);
}

}  // namespace grd
