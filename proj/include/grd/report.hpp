#pragma once

// Analysis reports for the command line: construction from a map, a text
// rendering, and a JSON encoding that reads back to the same report.
// Field elements are exact strings ("p/q", "a+b*sqrt(t)").

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grd/pgr.hpp"
#include "grd/quadpoly.hpp"

namespace grd {

using Json = nlohmann::json;

struct AnalyzeOptions {
  std::optional<std::vector<Prime>> primes;
  bool construct = true;
  bool verify = true;
};

struct PrimeFlag {
  Prime p;
  bool value;
};

struct Minimality {
  /// Res valuation below 2 at each analyzed prime.
  std::vector<PrimeFlag> resultant_bound;
  bool monic;
};

struct ReductionReport {
  RatMap2 input;
  Coeff input_resultant;
  /// Resultant of the integral, content-free model of the input.
  Coeff normalized_resultant;
  /// Primes dividing the normalized resultant, after any restriction.
  std::vector<Prime> primes;
  Decision decision;
  Minimality minimality;
  /// Independent certificate re-check; absent when not run or no certificate.
  std::optional<bool> verified;
};

ReductionReport analyze(const RatMap2& m, const AnalyzeOptions& options = {});

Json to_json(const ReductionReport& r);
/// Inverse of to_json; std::invalid_argument on malformed input.
ReductionReport report_from_json(const Json& j);
std::string to_text(const ReductionReport& r);

struct SigmaReport {
  RatMap2 input;
  MultiplierSpectrum spectrum;
};
Json to_json(const SigmaReport& r);
std::string to_text(const SigmaReport& r);

struct QuadpolyReport {
  Rational c;
  std::optional<Integer> k;  // set when given as k, c = k/4
  QuadraticPgr pgr;
  std::optional<K4Result> mod4;  // only when 4c is an integer
  /// Good model over Q(sqrt(1 - 4c)) when PGR holds.
  std::optional<PgrCertificate> extension_model;
};
QuadpolyReport analyze_quadpoly(const Rational& c, std::optional<Integer> k = std::nullopt);
Json to_json(const QuadpolyReport& r);
std::string to_text(const QuadpolyReport& r);

}  // namespace grd
