#include "grd/pgr.hpp"

#include <algorithm>
#include <map>

namespace grd {

std::string to_string(LocalVerdict v) {
  switch (v) {
    case LocalVerdict::AlreadyGoodAtP: return "AlreadyGoodAtP";
    case LocalVerdict::Case1: return "Case1";
    case LocalVerdict::Case2: return "Case2";
    case LocalVerdict::Case3: return "Case3";
    case LocalVerdict::GenuinelyBadAtP: return "GenuinelyBadAtP";
    case LocalVerdict::FormBGood: return "FormBGood";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PGR: return "PGR";
    case Verdict::PGRDecisionOnly: return "PGRDecisionOnly";
    case Verdict::GenuinelyBad: return "GenuinelyBad";
  }
  return "?";
}

namespace {

const Valuation kZero = Valuation::finite(Rational(0));

Rational power_of(const Prime& p, long e) { return Rational(p.value()).pow(static_cast<int>(e)); }

long finite_val(const Rational& x, const Prime& p) {
  return static_cast<long>(val_p(x, p).value().num().get_si());
}

}  // namespace

LocalAnalysis classify_at_p(const Rational& lambda1, const Rational& lambda2, const Prime& p) {
  if (val_p(lambda1, p) < kZero || val_p(lambda2, p) < kZero) {
    throw std::invalid_argument("multipliers must be integral at p (a non-integral one is repelling)");
  }
  if (lambda1 * lambda2 == Rational(1)) throw std::invalid_argument("l1 l2 = 1 belongs to the form B path");

  LocalAnalysis la{p, LocalVerdict::AlreadyGoodAtP, lambda1, lambda2};
  if (val_p(Rational(1) - lambda1 * lambda2, p) == kZero) return la;

  // With l1 l2 = 1 mod p but l1 != 1 mod p, 2 - l1 - l2 = -(l1 - 1)^2 / l1
  // is a unit, so l3 has negative valuation.
  if (val_p(lambda1 - Rational(1), p) == kZero) {
    la.verdict = LocalVerdict::GenuinelyBadAtP;
    return la;
  }
  auto decompose = [&](const Rational& lambda, std::optional<long>& e, std::optional<Rational>& u) {
    const Rational shifted = lambda - Rational(1);
    if (shifted.is_zero()) return;
    e = finite_val(shifted, p);
    u = shifted / power_of(p, *e);
  };
  decompose(lambda1, la.e1, la.a1);
  decompose(lambda2, la.e2, la.a2);
  if ((la.e1 && *la.e1 <= 0) || (la.e2 && *la.e2 <= 0)) throw std::logic_error("unreduced multiplier pair");

  if (la.e1 != la.e2) {
    // A missing exponent is +infinity.
    const bool first_smaller = la.e1 && (!la.e2 || *la.e1 < *la.e2);
    if (!first_smaller) {
      std::swap(la.e1, la.e2);
      std::swap(la.a1, la.a2);
      la.swapped = true;
    }
    la.verdict = LocalVerdict::Case1;
    la.c_exponent = *la.e1;
    return la;
  }

  const long e = *la.e1;
  const Rational sum = *la.a1 + *la.a2;
  const std::optional<long> d = sum.is_zero() ? std::nullopt : std::optional<long>(finite_val(sum, p));
  if (d && *d < e) {
    la.verdict = LocalVerdict::Case2;
    la.d = d;
    la.a = sum / power_of(p, *d);
    la.c_exponent = e + *d;
    return la;
  }
  la.a = sum / power_of(p, e);
  if (val_p(*la.a + *la.a1 * *la.a2, p) > kZero) {
    la.verdict = LocalVerdict::GenuinelyBadAtP;
    return la;
  }
  la.verdict = LocalVerdict::Case3;
  la.c_exponent = 2 * e;
  return la;
}

namespace {

bool constructive(LocalVerdict v) {
  return v == LocalVerdict::Case1 || v == LocalVerdict::Case2 || v == LocalVerdict::Case3;
}

// c with c^2 = prod p^w, written k * sqrt(t) with t square-free.
Coeff scaling_constant(const std::map<Prime, long>& exponents) {
  Integer k = 1;
  Integer t = 1;
  for (const auto& [p, w] : exponents) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.value().get_mpz_t(), static_cast<unsigned long>(w / 2));
    k *= pk;
    if (w % 2 == 1) t *= p.value();
  }
  if (t == 1) return Coeff(k);
  return QuadExtElem(Rational(0), Rational(k), Rational(t));
}

Integer working_radicand(const PgrCertificate& cert) {
  std::vector<Coeff> xs{cert.f.a(), cert.f.b(), cert.f.c(), cert.f.d(), cert.g.a(), cert.g.b(),
                        cert.g.c(), cert.g.d(), cert.c};
  for (const auto* q : {&cert.result.f(), &cert.result.g()}) xs.insert(xs.end(), q->begin(), q->end());
  return common_radicand(xs);
}

PgrCertificate conjugate_and_normalize(const RatMap2& source, const Moebius& f, const Moebius& g, const Coeff& c,
                                       std::vector<Prime> primes) {
  const RatMap2 raw = conjugate(source, compose(f, g));
  const ContentSplit split = split_content(raw);
  PgrCertificate cert{Integer(1),
                      c,
                      f,
                      g,
                      source,
                      raw,
                      split.content,
                      split.primitive,
                      resultant(split.primitive),
                      std::move(primes),
                      std::nullopt};
  cert.extension_t = working_radicand(cert);
  return cert;
}

// Conjugate and rescale onto a known model. Content normalization over
// Z[sqrt t] is only canonical up to units, so the model is supplied and the
// content is read off as a coefficient ratio.
PgrCertificate conjugate_onto(const RatMap2& source, const Moebius& f, const Moebius& g, const Coeff& c,
                              std::vector<Prime> primes, const RatMap2& target) {
  const RatMap2 raw = conjugate(source, compose(f, g));
  if (!same_map(raw, target)) throw std::logic_error("conjugate is not the expected model");
  Coeff content;
  for (int i = 0; i < 6 && content.is_zero(); ++i) {
    const Coeff& t = i < 3 ? target.f()[i] : target.g()[i - 3];
    const Coeff& r = i < 3 ? raw.f()[i] : raw.g()[i - 3];
    if (!t.is_zero()) content = r / t;
  }
  PgrCertificate cert{Integer(1), c, f, g, source, raw, content, target, resultant(target), std::move(primes),
                      std::nullopt};
  cert.extension_t = working_radicand(cert);
  return cert;
}

}  // namespace

PgrCertificate global_conjugator(const std::vector<LocalAnalysis>& analyses, const RatMap2& form_a) {
  std::map<Prime, long> exponents;
  std::vector<Prime> primes;
  for (const auto& la : analyses) {
    if (la.verdict == LocalVerdict::AlreadyGoodAtP) continue;
    if (!constructive(la.verdict)) {
      throw std::invalid_argument("prime " + la.p.value().get_str() + " is " + to_string(la.verdict) +
                                  "; no local conjugator exists");
    }
    exponents[la.p] += la.c_exponent;
    primes.push_back(la.p);
  }
  const Coeff c = scaling_constant(exponents);
  PgrCertificate cert = conjugate_and_normalize(form_a, Moebius::translation(Coeff(-1)), Moebius::scaling(c), c, primes);

  for (const auto& p : cert.analyzed_primes) {
    if (!(val_ext(cert.result_resultant, p) == kZero)) {
      throw std::logic_error("conjugated model still has bad reduction at " + p.value().get_str());
    }
  }
  const Coeff c2 = c * c;
  const Coeff ratio = cert.content / c2;
  cert.resultant_relation = resultant(form_a) == c2 * cert.result_resultant * ratio.pow(4);
  if (!*cert.resultant_relation) throw std::logic_error("Res(phi) = c^2 Res(result) failed");
  return cert;
}

PgrCertificate build_conjugator_local(const LocalAnalysis& la) {
  if (!constructive(la.verdict)) {
    throw std::invalid_argument(to_string(la.verdict) + " has no local conjugator");
  }
  return global_conjugator({la}, form_a_map(Coeff(la.lambda1), Coeff(la.lambda2)));
}

PgrCertificate form_b_certificate(const Coeff& lambda3) {
  if (!is_algebraic_integer(lambda3)) throw std::invalid_argument("form B needs an integral third multiplier");
  if (!lambda3.is_rational()) throw std::invalid_argument("form B certificate needs a rational multiplier");
  const Coeff s = QuadExtElem::sqrt_of(Rational(1) - lambda3.as_rational());
  const RatMap2 model = form_b_map(s);
  return conjugate_and_normalize(model, Moebius::identity(), Moebius::identity(), Coeff(1), {});
}

std::vector<Prime> resultant_primes(const Coeff& res) {
  std::vector<Prime> out;
  const Rational n = res.norm();
  for (const Integer& part : {n.num(), n.den()}) {
    if (abs(part) <= 1) continue;
    for (const auto& [p, e] : factor_integer(part)) {
      (void)e;
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Prime> restrict_to(std::vector<Prime> primes, const DecideOptions& options) {
  if (!options.primes) return primes;
  std::vector<Prime> out;
  for (const auto& p : primes) {
    if (std::find(options.primes->begin(), options.primes->end(), p) != options.primes->end()) out.push_back(p);
  }
  return out;
}

bool unit_at_all(const Coeff& res, const std::vector<Prime>& primes) {
  return std::all_of(primes.begin(), primes.end(), [&](const Prime& p) { return val_ext(res, p) == kZero; });
}

bool integral_map(const RatMap2& m) {
  for (const auto* q : {&m.f(), &m.g()}) {
    for (const auto& c : *q) {
      if (!is_algebraic_integer(c)) return false;
    }
  }
  return true;
}

// Lift a certificate on the normal-form model to the original map.
PgrCertificate lift(const PgrCertificate& local, const RatMap2& original, const Moebius& to_model) {
  PgrCertificate cert =
      conjugate_onto(original, compose(to_model, local.f), local.g, local.c, local.analyzed_primes, local.result);
  cert.resultant_relation = local.resultant_relation;
  return cert;
}

}  // namespace

Decision decide_pgr(const RatMap2& input, const DecideOptions& options) {
  if (!input.is_rational()) throw std::invalid_argument("decide_pgr expects a map over Q");
  const RatMap2 m = normalize_content(input);
  Decision out{Verdict::PGR, sigma_invariants(m), std::nullopt, {}, std::nullopt, std::nullopt, ""};

  const auto failing = restrict_to(non_integral_primes(out.spectrum), options);
  if (!failing.empty()) {
    const Prime& p = failing.front();
    out.verdict = Verdict::GenuinelyBad;
    const bool s1_bad = !is_integral_at(out.spectrum.sigma1, p);
    const Coeff& bad = s1_bad ? out.spectrum.sigma1 : out.spectrum.sigma2;
    BadWitness w{p, s1_bad ? "sigma1" : "sigma2", val_ext(bad, p), std::nullopt};
    if (out.spectrum.multipliers) {
      for (const auto& l : *out.spectrum.multipliers) {
        if (!is_integral_at(l, p)) {
          w.multiplier = l;
          break;
        }
      }
    }
    out.witness = w;
    out.note = "repelling fixed point at p = " + p.value().get_str();
    return out;
  }

  if (!options.construct) {
    out.verdict = Verdict::PGRDecisionOnly;
    out.note = "integral moduli point; construction skipped";
    return out;
  }

  const Coeff input_res = resultant(m);
  const auto input_primes = restrict_to(resultant_primes(input_res), options);
  if (unit_at_all(input_res, input_primes)) {
    out.certificate =
        conjugate_and_normalize(m, Moebius::identity(), Moebius::identity(), Coeff(1), input_primes);
    out.note = "already good reduction";
    return out;
  }

  std::optional<NormalForm> built;
  try {
    built = to_normal_form(m);
  } catch (const NotConstructible& e) {
    out.verdict = Verdict::PGRDecisionOnly;
    out.note = std::string("normal form not constructible: ") + e.what();
    return out;
  }
  const NormalForm& nf = *built;
  out.normal_form = nf;

  if (nf.kind == NormalForm::Kind::FormB) {
    const PgrCertificate local = form_b_certificate(nf.lambda3);
    for (const auto& p : input_primes) {
      out.local.push_back(LocalAnalysis{p, LocalVerdict::FormBGood, Rational(1), Rational(1)});
    }
    out.certificate = conjugate_onto(m, nf.conjugator, Moebius::identity(), Coeff(1), input_primes, local.result);
    out.note = "form B model has unit resultant";
    return out;
  }

  const Coeff model_res = resultant(nf.model);
  const auto primes = restrict_to(resultant_primes(model_res), options);
  if (!nf.lambda1.is_rational() || !nf.lambda2.is_rational()) {
    if (integral_map(nf.model) && unit_at_all(model_res, primes)) {
      out.certificate = conjugate_onto(m, nf.conjugator, Moebius::identity(), Coeff(1), primes, nf.model);
      out.note = "normal form over Q(sqrt " + nf.extension.get_str() + ") has unit resultant";
      return out;
    }
    out.verdict = Verdict::PGRDecisionOnly;
    out.note = "multipliers are irrational; the local construction would need a second extension";
    return out;
  }

  const Rational l1 = nf.lambda1.as_rational();
  const Rational l2 = nf.lambda2.as_rational();
  for (const auto& p : primes) out.local.push_back(classify_at_p(l1, l2, p));
  for (const auto& la : out.local) {
    if (la.verdict == LocalVerdict::GenuinelyBadAtP) {
      out.verdict = Verdict::GenuinelyBad;
      out.witness = BadWitness{la.p, "lambda3", val_ext(nf.lambda3, la.p), nf.lambda3};
      out.note = "third multiplier is not integral";
      return out;
    }
  }
  const PgrCertificate local = global_conjugator(out.local, nf.model);
  const Integer tc = common_radicand({local.c});
  if (nf.extension != 1 && tc != 1 && tc != nf.extension) {
    out.verdict = Verdict::PGRDecisionOnly;
    out.note = "fixed points over Q(sqrt " + nf.extension.get_str() + ") and scaling over Q(sqrt " + tc.get_str() +
               "); the certificate would need a biquadratic field";
    return out;
  }
  out.certificate = lift(local, m, nf.conjugator);
  return out;
}

bool verify_certificate(const PgrCertificate& cert) {
  const Moebius total = compose(cert.f, cert.g);
  const RatMap2 raw = conjugate(cert.source, total);
  if (!(raw == cert.raw)) return false;
  if (cert.content.is_zero() || !(raw == cert.result.scaled(cert.content))) return false;
  const Coeff res = resultant_by_formula(cert.result.f(), cert.result.g());
  if (!(res == cert.result_resultant)) return false;
  // Res(raw) = det^6 Res(source) and Res(raw) = content^4 Res(result).
  const Coeff det = total.det();
  const Coeff raw_res = resultant_by_formula(raw.f(), raw.g());
  if (!(raw_res == det.pow(6) * resultant_by_formula(cert.source.f(), cert.source.g()))) return false;
  if (!(raw_res == cert.content.pow(4) * res)) return false;
  for (const auto* q : {&cert.result.f(), &cert.result.g()}) {
    for (const auto& c : *q) {
      if (!is_algebraic_integer(c)) return false;
    }
  }
  for (const auto& p : cert.analyzed_primes) {
    if (!(val_ext(res, p) == kZero)) return false;
  }
  return true;
}

bool is_minimal_by_resultant(const RatMap2& m, const Prime& p) {
  return val_ext(resultant(normalize_content(m)), p) < Valuation::finite(Rational(2));
}

bool is_minimal_monic_criterion(const RatMap2& m) {
  const RatMap2 n = normalize_content(m);
  return n.f()[0] == Coeff(1) && n.g()[0].is_zero() && n.g()[1] == Coeff(1);
}

}  // namespace grd
