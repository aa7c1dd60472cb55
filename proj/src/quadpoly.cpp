#include "grd/quadpoly.hpp"

namespace grd {

RatMap2 quadratic_map(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
  return RatMap2({Coeff(a), Coeff(b), Coeff(c)}, {Coeff(0), Coeff(0), Coeff(1)});
}

QuadraticNormalization normalize_quadratic(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) throw std::invalid_argument("not a quadratic polynomial: A = 0");
  // f(z) = (z - B/2) / A kills the linear term and makes the result monic.
  const Rational shift = -b / (Rational(2) * a);
  const Rational constant = (a * shift * shift + b * shift + c - shift) * a;
  return {constant, Moebius(Coeff(Rational(1) / a), Coeff(shift), 0, 1)};
}

QuadraticPgr pgr_quadratic(const Rational& c) {
  const Rational four_c = Rational(4) * c;
  QuadraticPgr out{four_c.is_integer(), {}};
  if (!out.pgr) {
    for (const auto& [p, e] : factor_integer(four_c.den())) {
      (void)e;
      out.failing_primes.push_back(p);
    }
  }
  return out;
}

PgrCertificate conjugate_to_good_quadratic(const Rational& c) {
  if (!pgr_quadratic(c).pgr) throw std::invalid_argument("4c is not integral; z^2 + c is genuinely bad");
  const Coeff root = QuadExtElem::sqrt_of(Rational(1) - Rational(4) * c);
  const Coeff alpha = (Coeff(1) + root) / Coeff(2);
  const RatMap2 source = quadratic_map(Rational(1), Rational(0), c);
  const Moebius f = Moebius::translation(alpha);
  const RatMap2 raw = conjugate(source, f);
  const ContentSplit split = split_content(raw);
  const RatMap2 expected({Coeff(1), Coeff(1) + root, Coeff(0)}, {Coeff(0), Coeff(0), Coeff(1)});
  if (!(split.primitive == expected)) throw std::logic_error("fixed-point translation gave an unexpected model");
  std::vector<Prime> primes;
  for (const auto& [p, e] : factor_integer(c.den())) {
    (void)e;
    primes.push_back(p);
  }
  return PgrCertificate{root.is_rational() ? Integer(1) : root.t(),
                        Coeff(1),
                        f,
                        Moebius::identity(),
                        source,
                        raw,
                        split.content,
                        split.primitive,
                        resultant(split.primitive),
                        primes,
                        std::nullopt};
}

K4Result k4_criterion(const Integer& k) {
  Integer r = k % 4;
  if (r < 0) r += 4;
  if (r == 0) return {true, Integer(0), Integer(k / 4)};
  if (r == 1) return {true, Integer(1), Integer((k - 1) / 4)};
  return {false, Integer(0), Integer(0)};
}

}  // namespace grd
