#include <doctest.h>

#include "grd/pgr.hpp"
#include "oracles.hpp"

using namespace grd;
using oracle::map;

namespace {
const Coeff r2(0, 1, 2);
const Coeff r3(0, 1, 3);
}  // namespace

TEST_CASE("classify_at_p examples") {
  const auto a = classify_at_p(-2, -2, Prime(3));
  CHECK(a.verdict == LocalVerdict::Case2);
  CHECK(a.e1 == 1);
  CHECK(a.e2 == 1);
  CHECK(a.d == 0);
  CHECK(a.a == Rational(-2));
  CHECK(a.c_exponent == 1);

  const auto b = classify_at_p(9, 1, Prime(2));
  CHECK(b.verdict == LocalVerdict::Case1);
  CHECK(b.e1 == 3);
  CHECK_FALSE(b.e2.has_value());
  CHECK(b.c_exponent == 3);
  CHECK_FALSE(b.swapped);

  const auto c = classify_at_p(4, 7, Prime(3));
  CHECK(c.verdict == LocalVerdict::GenuinelyBadAtP);
  CHECK(c.a1 == Rational(1));
  CHECK(c.a2 == Rational(2));
  CHECK(c.a == Rational(1));

  const auto d = classify_at_p(-3, -1, Prime(2));
  CHECK(d.verdict == LocalVerdict::Case1);
  CHECK(d.e1 == 1);
  CHECK(d.e2 == 2);
  CHECK(d.swapped);
  CHECK(d.c_exponent == 1);

  // Case3: a1 = 1, a2 = -1 at p = 3, so a1 + a2 = 0 and a + a1 a2 = -1.
  const auto e = classify_at_p(4, -2, Prime(3));
  CHECK(e.verdict == LocalVerdict::Case3);
  CHECK(e.c_exponent == 2);
  CHECK(build_conjugator_local(e).result_resultant.norm().abs() == Rational(1));
  // a1 = a2 = 1 at p = 2: a + a1 a2 = 2, genuinely bad (lambda3 = 1/2).
  CHECK(classify_at_p(3, 3, Prime(2)).verdict == LocalVerdict::GenuinelyBadAtP);

  CHECK(classify_at_p(2, 3, Prime(7)).verdict == LocalVerdict::AlreadyGoodAtP);
  CHECK_THROWS_AS(classify_at_p(Rational(1, 3), 2, Prime(3)), std::invalid_argument);
  CHECK_THROWS_AS(classify_at_p(2, Rational(1, 2), Prime(3)), std::invalid_argument);
}

TEST_CASE("local certificates") {
  const auto one = build_conjugator_local(classify_at_p(-2, -2, Prime(3)));
  CHECK(one.result == RatMap2({1, Coeff(0, -2, 3), 2}, {0, -2, r3}));
  // Res(phi) = -3 and c^2 = 3 force Res(result) = -1.
  CHECK(one.result_resultant == Coeff(-1));
  CHECK(one.resultant_relation == true);
  CHECK(one.c == r3);
  CHECK(one.extension_t == 3);
  CHECK(verify_certificate(one));

  const auto two = build_conjugator_local(classify_at_p(9, 1, Prime(2)));
  CHECK(two.result == RatMap2({1, Coeff(0, 2, 2), -1}, {0, 1, 0}));
  CHECK(two.result_resultant == Coeff(-1));
  CHECK(two.c == Coeff(0, 2, 2));

  const auto three = build_conjugator_local(classify_at_p(-3, -1, Prime(2)));
  CHECK(three.result == RatMap2({1, Coeff(0, -3, 2), 3}, {0, -1, r2}));
  CHECK(three.result_resultant == Coeff(-1));

  CHECK_THROWS(build_conjugator_local(classify_at_p(4, 7, Prime(3))));
}

TEST_CASE("global conjugator over several primes") {
  const RatMap2 model = form_a_map(13, 1);
  std::vector<LocalAnalysis> la{classify_at_p(13, 1, Prime(2)), classify_at_p(13, 1, Prime(3))};
  CHECK(la[0].c_exponent == 2);
  CHECK(la[1].c_exponent == 1);
  const auto cert = global_conjugator(la, model);
  CHECK(cert.c == Coeff(0, 2, 3));
  CHECK(cert.result == RatMap2({1, Coeff(0, 2, 3), -1}, {0, 1, 0}));
  CHECK(cert.result_resultant == Coeff(-1));
  CHECK(verify_certificate(cert));

  const auto single = global_conjugator({classify_at_p(-2, -2, Prime(3))}, form_a_map(-2, -2));
  CHECK(single.result == build_conjugator_local(classify_at_p(-2, -2, Prime(3))).result);

  CHECK_THROWS(global_conjugator({classify_at_p(4, 7, Prime(3))}, form_a_map(4, 7)));
}

TEST_CASE("form B certificates") {
  const auto a = form_b_certificate(0);
  CHECK(a.result == map(1, 1, 1, 0, 1, 0));
  CHECK((a.result_resultant == Coeff(1) || a.result_resultant == Coeff(-1)));
  CHECK(form_b_certificate(1).result == map(1, 0, 1, 0, 1, 0));
  CHECK(form_b_certificate(-3).result == map(1, 2, 1, 0, 1, 0));
  // lambda3 = 3: sqrt(-2) enters.
  const auto d = form_b_certificate(3);
  CHECK(d.extension_t == -2);
  CHECK(verify_certificate(d));
  CHECK_THROWS_AS(form_b_certificate(Coeff(Rational(1, 2))), std::invalid_argument);
}

TEST_CASE("decide_pgr on the worked examples") {
  struct Case {
    RatMap2 input;
    Coeff res;
    Coeff c;
    RatMap2 result;
    Coeff final_res;
  };
  const std::vector<Case> cases{
      {map(1, -2, 0, 0, -2, 1), -3, r3, RatMap2({1, Coeff(0, -2, 3), 2}, {0, -2, r3}), -1},
      {map(1, 9, 0, 0, 1, 1), -8, Coeff(0, 2, 2), RatMap2({1, Coeff(0, 2, 2), -1}, {0, 1, 0}), -1},
      {map(1, -3, 0, 0, -1, 1), -2, r2, RatMap2({1, Coeff(0, -3, 2), 3}, {0, -1, r2}), -1},
      {map(1, 13, 0, 0, 1, 1), -12, Coeff(0, 2, 3), RatMap2({1, Coeff(0, 2, 3), -1}, {0, 1, 0}), -1},
  };
  for (const auto& k : cases) {
    CAPTURE(k.input.to_string());
    CHECK(resultant(k.input) == k.res);
    const Decision d = decide_pgr(k.input);
    REQUIRE(d.verdict == Verdict::PGR);
    REQUIRE(d.certificate.has_value());
    CHECK(d.certificate->c == k.c);
    CHECK(d.certificate->f.same_as(Moebius::translation(-1)));
    CHECK(d.certificate->g.same_as(Moebius::scaling(k.c)));
    CHECK(d.certificate->result == k.result);
    CHECK(d.certificate->result_resultant == k.final_res);
    CHECK(verify_certificate(*d.certificate));
  }
}

TEST_CASE("decide_pgr verdicts") {
  const Decision bad = decide_pgr(RatMap2({1, 0, Coeff(Rational(1, 3))}, {0, 0, 1}));
  CHECK(bad.verdict == Verdict::GenuinelyBad);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->p == Prime(3));
  CHECK(bad.witness->invariant == "sigma2");
  CHECK(bad.witness->valuation == Valuation::finite(-1));

  const Decision bad2 = decide_pgr(map(1, 4, 0, 0, 7, 1));
  CHECK(bad2.verdict == Verdict::GenuinelyBad);
  REQUIRE(bad2.witness.has_value());
  CHECK(bad2.witness->p == Prime(3));
  CHECK(bad2.witness->multiplier == Coeff(Rational(1, 3)));

  const Decision good = decide_pgr(map(1, 0, 0, 0, 0, 1));
  CHECK(good.verdict == Verdict::PGR);
  REQUIRE(good.certificate.has_value());
  CHECK(good.certificate->f.same_as(Moebius::identity()));
  CHECK(good.certificate->g.same_as(Moebius::identity()));

  DecideOptions no_build;
  no_build.construct = false;
  CHECK(decide_pgr(map(1, -2, 0, 0, -2, 1), no_build).verdict == Verdict::PGRDecisionOnly);

  // 2/z^2 has an irreducible fixed-point cubic and Res = 4: decision only.
  const Decision cubic = decide_pgr(map(0, 0, 2, 1, 0, 0));
  CHECK(cubic.verdict != Verdict::GenuinelyBad);

  // Restricting to p = 2 hides the bad prime 3.
  DecideOptions only2;
  only2.primes = std::vector<Prime>{Prime(2)};
  CHECK(decide_pgr(map(1, 4, 0, 0, 7, 1), only2).verdict != Verdict::GenuinelyBad);

  CHECK_THROWS_AS(decide_pgr(RatMap2({1, r2, 0}, {0, 0, 1})), std::invalid_argument);
}

TEST_CASE("decide_pgr away from normal form") {
  // The (z^2-2z)/(-2z+1) map moved by an integral conjugation still certifies.
  const RatMap2 moved = conjugate(map(1, -2, 0, 0, -2, 1), Moebius(1, 1, 0, 1));
  const Decision d = decide_pgr(moved);
  REQUIRE(d.verdict == Verdict::PGR);
  REQUIRE(d.certificate.has_value());
  CHECK(verify_certificate(*d.certificate));
  CHECK(same_map(d.certificate->source, moved));
  for (const auto& p : d.certificate->analyzed_primes) {
    CHECK(val_ext(d.certificate->result_resultant, p) == Valuation::finite(0));
  }
}

TEST_CASE("minimality predicates") {
  CHECK(is_minimal_by_resultant(map(1, -2, 0, 0, -2, 1), Prime(3)));
  CHECK(is_minimal_by_resultant(map(1, -3, 0, 0, -1, 1), Prime(2)));
  CHECK_FALSE(is_minimal_by_resultant(map(1, 9, 0, 0, 1, 1), Prime(2)));
  CHECK(is_minimal_monic_criterion(map(1, 9, 0, 0, 1, 1)));
  CHECK(is_minimal_monic_criterion(map(1, 13, 0, 0, 1, 1)));
  CHECK_FALSE(is_minimal_monic_criterion(map(1, -2, 0, 0, -2, 1)));
}

TEST_CASE("verify_certificate catches tampering") {
  auto cert = build_conjugator_local(classify_at_p(9, 1, Prime(2)));
  REQUIRE(verify_certificate(cert));
  auto bad = cert;
  bad.result_resultant = Coeff(1);
  CHECK_FALSE(verify_certificate(bad));
  bad = cert;
  bad.content = cert.content * Coeff(2);
  CHECK_FALSE(verify_certificate(bad));
  bad = cert;
  bad.g = Moebius::scaling(2);
  CHECK_FALSE(verify_certificate(bad));
}

TEST_CASE("resultant_primes") {
  CHECK(resultant_primes(-12) == std::vector<Prime>{Prime(2), Prime(3)});
  CHECK(resultant_primes(1).empty());
  CHECK(resultant_primes(Coeff(0, 1, 3)) == std::vector<Prime>{Prime(3)});
}
