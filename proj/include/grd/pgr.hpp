#pragma once

// Potential good reduction: per-prime classification of a normal form
// (z^2 + l1 z)/(l2 z + 1), the conjugators z -> z - 1, z -> c z that clear
// the resultant, the global combination over Z, and the decision procedure.

#include <optional>
#include <string>
#include <vector>

#include "grd/invariants.hpp"

namespace grd {

enum class LocalVerdict { AlreadyGoodAtP, Case1, Case2, Case3, GenuinelyBadAtP, FormBGood };

std::string to_string(LocalVerdict v);

/// Shape of (l1, l2) at p, writing li = 1 + ai p^ei with p not dividing ai.
/// ei absent encodes li = 1 (ei = +infinity).
struct LocalAnalysis {
  Prime p;
  LocalVerdict verdict;
  Rational lambda1;  // as given
  Rational lambda2;
  std::optional<long> e1;  // Case1 reports e1 < e2 (see `swapped`)
  std::optional<long> e2;
  std::optional<Rational> a1;
  std::optional<Rational> a2;
  std::optional<Rational> a;
  std::optional<long> d;  // Case2 only
  long c_exponent = 0;    // c = sqrt(p^c_exponent)
  bool swapped = false;   // e1/e2 (and a1/a2) were exchanged relative to l1/l2
};

/// Requires l1, l2 integral at p and l1 l2 != 1 (std::invalid_argument).
LocalAnalysis classify_at_p(const Rational& lambda1, const Rational& lambda2, const Prime& p);

struct PgrCertificate {
  Integer extension_t;  // radicand of the working field, 1 for Q
  Coeff c;              // scaling constant of g
  Moebius f;
  Moebius g;
  RatMap2 source;       // the map f and g act on
  RatMap2 raw;          // source^(f o g) before normalization
  Coeff content;        // raw = content * result
  RatMap2 result;
  Coeff result_resultant;
  std::vector<Prime> analyzed_primes;
  /// Res(source) = c^2 Res(result) (content/c^2)^4 for the z - 1, c z
  /// construction; unset for certificates that do not scale by c.
  std::optional<bool> resultant_relation;
};

/// Local construction for a constructive verdict (Case1/2/3) on the FormA
/// model built from la.lambda1, la.lambda2.
PgrCertificate build_conjugator_local(const LocalAnalysis& la);

/// One conjugation by z - 1 then c z with c^2 = prod p^c_exponent over all
/// analyses. AlreadyGoodAtP entries contribute nothing; GenuinelyBadAtP or
/// FormBGood entries are rejected.
PgrCertificate global_conjugator(const std::vector<LocalAnalysis>& analyses, const RatMap2& form_a);

/// z + sqrt(1 - l3) + 1/z; requires l3 integral (std::invalid_argument).
PgrCertificate form_b_certificate(const Coeff& lambda3);

enum class Verdict { PGR, PGRDecisionOnly, GenuinelyBad };
std::string to_string(Verdict v);

struct BadWitness {
  Prime p;
  std::string invariant;   // "sigma1", "sigma2" or "lambda3"
  Valuation valuation;
  std::optional<Coeff> multiplier;  // explicit non-integral multiplier
};

struct DecideOptions {
  /// Restrict local analysis and construction to these primes.
  std::optional<std::vector<Prime>> primes;
  bool construct = true;
};

struct Decision {
  Verdict verdict;
  MultiplierSpectrum spectrum;
  std::optional<NormalForm> normal_form;
  std::vector<LocalAnalysis> local;
  std::optional<PgrCertificate> certificate;
  std::optional<BadWitness> witness;
  std::string note;
};

/// Decide potential good reduction of a map over Q and, when possible,
/// build a certificate. std::invalid_argument for maps over extensions.
Decision decide_pgr(const RatMap2& m, const DecideOptions& options = {});

/// Primes dividing the norm of a nonzero resultant, ascending.
std::vector<Prime> resultant_primes(const Coeff& res);

/// Independent re-check: recompute source^(f o g), check raw = content * result,
/// the resultant (closed form, not Sylvester), integrality and the unit
/// condition at the analyzed primes.
bool verify_certificate(const PgrCertificate& cert);

/// val_p(Res) < 2: a sufficient condition for minimality at p (d = 2).
bool is_minimal_by_resultant(const RatMap2& m, const Prime& p);
/// Monic quadratic numerator over a monic linear denominator.
bool is_minimal_monic_criterion(const RatMap2& m);

}  // namespace grd
