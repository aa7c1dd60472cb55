#include <doctest.h>

#include <algorithm>

#include "grd/invariants.hpp"
#include "oracles.hpp"

using namespace grd;
using oracle::map;

namespace {

bool has_point(const std::vector<FixedPoint>& v, const ProjPoint& p, int mult) {
  return std::any_of(v.begin(), v.end(), [&](const FixedPoint& x) { return x.point == p && x.multiplicity == mult; });
}

}  // namespace

TEST_CASE("fixed points") {
  const auto a = fixed_points(map(1, -2, 0, 0, -2, 1));
  REQUIRE(a.has_value());
  CHECK(a->size() == 3);
  CHECK(has_point(*a, ProjPoint::affine(0), 1));
  CHECK(has_point(*a, ProjPoint::affine(1), 1));
  CHECK(has_point(*a, ProjPoint::infinity(), 1));

  const auto b = fixed_points(map(1, 0, 0, 0, 0, 1));
  REQUIRE(b.has_value());
  CHECK(b->size() == 3);
  CHECK(has_point(*b, ProjPoint::affine(1), 1));

  const auto c = fixed_points(map(1, 9, 0, 0, 1, 1));
  REQUIRE(c.has_value());
  CHECK(has_point(*c, ProjPoint::affine(0), 1));
  CHECK(has_point(*c, ProjPoint::infinity(), 2));

  // z^2 + 1 fixes (1 +- sqrt(-3))/2.
  const auto d = fixed_points(map(1, 0, 1, 0, 0, 1));
  REQUIRE(d.has_value());
  CHECK(has_point(*d, ProjPoint::affine(Coeff(Rational(1, 2), Rational(1, 2), -3)), 1));

  // 2/z^2: fixed-point cubic X^3 - 2Y^3 is irreducible.
  CHECK_FALSE(fixed_points(map(0, 0, 2, 1, 0, 0)).has_value());

  const auto phi = fixed_point_form(map(1, -2, 0, 0, -2, 1));
  CHECK(phi == CubicForm{0, -3, 3, 0});
}

TEST_CASE("multipliers") {
  const RatMap2 m = map(1, -2, 0, 0, -2, 1);
  CHECK(multiplier_at(m, ProjPoint::affine(0)) == Coeff(-2));
  CHECK(multiplier_at(m, ProjPoint::affine(1)) == Coeff(-2));
  CHECK(multiplier_at(m, ProjPoint::infinity()) == Coeff(-2));
  CHECK(multiplier_at(map(1, 0, 0, 0, 0, 1), ProjPoint::affine(1)) == Coeff(2));
  CHECK(multiplier_at(map(1, 0, 0, 0, 0, 1), ProjPoint::infinity()) == Coeff(0));
  CHECK(multiplier_at(map(1, 5, 0, 0, 3, 1), ProjPoint::infinity()) == Coeff(3));
  CHECK(multiplier_at(map(1, 5, 0, 0, 3, 1), ProjPoint::affine(0)) == Coeff(5));
  CHECK(multiplier_at(m, ProjPoint::affine(1)) == oracle::derivative_at(m, 1));
  CHECK_THROWS_AS(multiplier_at(m, ProjPoint::affine(2)), std::invalid_argument);
}

TEST_CASE("sigma invariants") {
  const auto a = sigma_invariants(map(1, -2, 0, 0, -2, 1));
  CHECK(a.sigma1 == Coeff(-6));
  CHECK(a.sigma2 == Coeff(12));
  CHECK(a.sigma3 == Coeff(-8));

  for (const Rational c : {Rational(0), Rational(5, 4), Rational(-1, 3), Rational(7)}) {
    const RatMap2 q({1, 0, Coeff(c)}, {0, 0, 1});
    const auto s = sigma_invariants(q);
    CHECK(s.sigma1 == Coeff(2));
    CHECK(s.sigma2 == Coeff(Rational(4) * c));
    CHECK(s.sigma3 == Coeff(0));
  }

  const auto b = sigma_invariants(map(1, 9, 0, 0, 1, 1));
  CHECK(b.sigma1 == Coeff(11));
  CHECK(b.sigma2 == Coeff(19));
  CHECK(b.sigma3 == Coeff(9));
  REQUIRE(b.multipliers.has_value());
  auto mult = *b.multipliers;
  std::sort(mult.begin(), mult.end(), lex_less);
  CHECK(mult == std::vector<Coeff>{1, 1, 9});

  // Fixed point at infinity and 0 both: pre-conjugation path.
  const auto c = sigma_invariants(map(1, 4, 0, 0, 7, 1));
  CHECK(c.sigma1 - c.sigma3 == Coeff(2));
  CHECK(c.sigma1 == Coeff(4) + Coeff(7) + Coeff(Rational(1, 3)));
}

TEST_CASE("lambda3 and integral points") {
  CHECK(lambda3_from_pair(9, 1) == Coeff(1));
  CHECK(lambda3_from_pair(0, 0) == Coeff(2));
  CHECK(lambda3_from_pair(4, 7) == Coeff(Rational(1, 3)));
  CHECK_THROWS_AS(lambda3_from_pair(2, Coeff(Rational(1, 2))), std::invalid_argument);

  const MultiplierSpectrum a{-6, 12, -8, std::nullopt};
  CHECK(is_integral_point(a));
  const MultiplierSpectrum b{2, Coeff(Rational(4, 3)), 0, std::nullopt};
  CHECK_FALSE(is_integral_point(b, Prime(3)));
  CHECK(is_integral_point(b, Prime(2)));
  CHECK(non_integral_primes(b) == std::vector<Prime>{Prime(3)});
  const MultiplierSpectrum c{2, 2, 0, std::nullopt};
  CHECK(is_integral_point(c));
}

TEST_CASE("normal forms") {
  const NormalForm z2 = to_normal_form(map(1, 0, 0, 0, 0, 1));
  CHECK(z2.kind == NormalForm::Kind::FormA);
  CHECK(z2.lambda1 == Coeff(0));
  CHECK(z2.lambda2 == Coeff(0));
  CHECK(z2.conjugator.same_as(Moebius::identity()));

  const NormalForm e2 = to_normal_form(map(1, 9, 0, 0, 1, 1));
  CHECK(e2.kind == NormalForm::Kind::FormA);
  CHECK(e2.lambda1 == Coeff(9));
  CHECK(e2.lambda2 == Coeff(1));
  CHECK(e2.conjugator.same_as(Moebius::identity()));

  // z + 1 + 1/z = (z^2 + z + 1)/z: double fixed point at infinity, lambda3 = 0.
  const NormalForm b = to_normal_form(map(1, 1, 1, 0, 1, 0));
  CHECK(b.kind == NormalForm::Kind::FormB);
  CHECK(b.lambda3 == Coeff(0));
  CHECK(b.sqrt_term * b.sqrt_term == Coeff(1));
  CHECK(same_map(b.model, form_b_map(1)) == true);

  // A map conjugate to form B: moved by z -> 2z + 1.
  const RatMap2 moved = conjugate(form_b_map(2), Moebius(2, 1, 0, 1));
  const NormalForm mb = to_normal_form(moved);
  CHECK(mb.kind == NormalForm::Kind::FormB);
  CHECK(mb.lambda3 == Coeff(-3));
  CHECK(same_map(conjugate(moved, mb.conjugator), mb.model));

  // Rational fixed points, away from 0 and infinity.
  const RatMap2 g = conjugate(form_a_map(3, -5), Moebius(1, 2, 3, 4));
  const NormalForm n = to_normal_form(g);
  CHECK(same_map(conjugate(g, n.conjugator), n.model));
  CHECK(sigma_invariants(n.model) == sigma_invariants(g));

  // Irreducible fixed-point cubic.
  CHECK_THROWS_AS(to_normal_form(map(0, 0, 2, 1, 0, 0)), NotConstructible);
  // Extension coefficients are not accepted.
  CHECK_THROWS_AS(to_normal_form(RatMap2({1, Coeff(0, 1, 2), 0}, {0, 0, 1})), NotConstructible);

  // Fixed points in Q(sqrt(-3)); model over the extension.
  const RatMap2 q = map(1, 0, 1, 0, 0, 1);
  const NormalForm nq = to_normal_form(q);
  CHECK(nq.kind == NormalForm::Kind::FormA);
  CHECK(nq.extension == -3);
  CHECK(same_map(conjugate(q, nq.conjugator), nq.model));
  CHECK(nq.model == form_a_map(nq.lambda1, nq.lambda2));
}

TEST_CASE("form maps") {
  CHECK(form_a_map(9, 1) == map(1, 9, 0, 0, 1, 1));
  CHECK(resultant(form_a_map(4, 7)) == Coeff(1 - 28));
  CHECK(form_b_map(0) == map(1, 0, 1, 0, 1, 0));
  CHECK_THROWS(form_a_map(2, Coeff(Rational(1, 2))));
}
