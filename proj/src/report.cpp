#include "grd/report.hpp"

#include <sstream>

namespace grd {

namespace {

// ---- encoders

Json elem(const Coeff& c) { return c.to_string(); }

Json prime(const Prime& p) { return to_string(p.value()); }

Json primes(const std::vector<Prime>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(prime(p));
  return a;
}

Json form(const QuadForm& q) { return Json::array({elem(q[0]), elem(q[1]), elem(q[2])}); }

Json map_json(const RatMap2& m) { return {{"text", m.to_string()}, {"f", form(m.f())}, {"g", form(m.g())}}; }

Json moebius(const Moebius& f) {
  return {{"text", f.to_string()}, {"matrix", Json::array({elem(f.a()), elem(f.b()), elem(f.c()), elem(f.d())})}};
}

template <class T, class F>
Json opt(const std::optional<T>& x, F encode) {
  return x ? encode(*x) : Json(nullptr);
}

Json spectrum(const MultiplierSpectrum& s) {
  Json j{{"sigma1", elem(s.sigma1)}, {"sigma2", elem(s.sigma2)}, {"sigma3", elem(s.sigma3)}};
  j["multipliers"] = opt(s.multipliers, [](const std::vector<Coeff>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(elem(x));
    return a;
  });
  return j;
}

const char* kind_name(NormalForm::Kind k) { return k == NormalForm::Kind::FormA ? "FormA" : "FormB"; }

Json normal_form(const NormalForm& nf) {
  return {{"kind", kind_name(nf.kind)},     {"lambda1", elem(nf.lambda1)},     {"lambda2", elem(nf.lambda2)},
          {"lambda3", elem(nf.lambda3)},    {"sqrt_term", elem(nf.sqrt_term)}, {"conjugator", moebius(nf.conjugator)},
          {"model", map_json(nf.model)},    {"extension", to_string(nf.extension)}};
}

Json local(const LocalAnalysis& la) {
  auto num = [](long v) { return Json(v); };
  auto rat = [](const Rational& v) { return Json(v.to_string()); };
  return {{"p", prime(la.p)},
          {"verdict", to_string(la.verdict)},
          {"lambda1", la.lambda1.to_string()},
          {"lambda2", la.lambda2.to_string()},
          {"e1", opt(la.e1, num)},
          {"e2", opt(la.e2, num)},
          {"a1", opt(la.a1, rat)},
          {"a2", opt(la.a2, rat)},
          {"a", opt(la.a, rat)},
          {"d", opt(la.d, num)},
          {"c_exponent", la.c_exponent},
          {"swapped", la.swapped}};
}

Json certificate(const PgrCertificate& c) {
  return {{"extension_t", to_string(c.extension_t)},
          {"c", elem(c.c)},
          {"f", moebius(c.f)},
          {"g", moebius(c.g)},
          {"source", map_json(c.source)},
          {"raw", map_json(c.raw)},
          {"content", elem(c.content)},
          {"result", map_json(c.result)},
          {"result_resultant", elem(c.result_resultant)},
          {"analyzed_primes", primes(c.analyzed_primes)},
          {"resultant_relation", opt(c.resultant_relation, [](bool b) { return Json(b); })}};
}

Json witness(const BadWitness& w) {
  return {{"p", prime(w.p)},
          {"invariant", w.invariant},
          {"valuation", w.valuation.to_string()},
          {"multiplier", opt(w.multiplier, elem)}};
}

// ---- decoders

Coeff read_elem(const Json& j) { return QuadExtElem::parse(j.get<std::string>()); }

Prime read_prime(const Json& j) { return Prime(Integer(j.get<std::string>())); }

std::vector<Prime> read_primes(const Json& j) {
  std::vector<Prime> out;
  for (const auto& x : j) out.push_back(read_prime(x));
  return out;
}

QuadForm read_form(const Json& j) { return {read_elem(j.at(0)), read_elem(j.at(1)), read_elem(j.at(2))}; }

RatMap2 read_map(const Json& j) { return RatMap2(read_form(j.at("f")), read_form(j.at("g"))); }

Moebius read_moebius(const Json& j) {
  const Json& m = j.at("matrix");
  return Moebius(read_elem(m.at(0)), read_elem(m.at(1)), read_elem(m.at(2)), read_elem(m.at(3)));
}

template <class T, class F>
std::optional<T> read_opt(const Json& j, F decode) {
  if (j.is_null()) return std::nullopt;
  return decode(j);
}

Rational read_rat(const Json& j) { return Rational::parse(j.get<std::string>()); }

Valuation read_valuation(const Json& j) {
  const auto s = j.get<std::string>();
  return s == "inf" ? Valuation::infinity() : Valuation::finite(Rational::parse(s));
}

MultiplierSpectrum read_spectrum(const Json& j) {
  MultiplierSpectrum s{read_elem(j.at("sigma1")), read_elem(j.at("sigma2")), read_elem(j.at("sigma3")), std::nullopt};
  if (!j.at("multipliers").is_null()) {
    std::vector<Coeff> v;
    for (const auto& x : j.at("multipliers")) v.push_back(read_elem(x));
    s.multipliers = std::move(v);
  }
  return s;
}

LocalVerdict read_local_verdict(const std::string& s) {
  for (auto v : {LocalVerdict::AlreadyGoodAtP, LocalVerdict::Case1, LocalVerdict::Case2, LocalVerdict::Case3,
                 LocalVerdict::GenuinelyBadAtP, LocalVerdict::FormBGood}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown local verdict '" + s + "'");
}

Verdict read_verdict(const std::string& s) {
  for (auto v : {Verdict::PGR, Verdict::PGRDecisionOnly, Verdict::GenuinelyBad}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

LocalAnalysis read_local(const Json& j) {
  auto num = [](const Json& x) { return x.get<long>(); };
  LocalAnalysis la{read_prime(j.at("p")), read_local_verdict(j.at("verdict")), read_rat(j.at("lambda1")),
                   read_rat(j.at("lambda2"))};
  la.e1 = read_opt<long>(j.at("e1"), num);
  la.e2 = read_opt<long>(j.at("e2"), num);
  la.a1 = read_opt<Rational>(j.at("a1"), read_rat);
  la.a2 = read_opt<Rational>(j.at("a2"), read_rat);
  la.a = read_opt<Rational>(j.at("a"), read_rat);
  la.d = read_opt<long>(j.at("d"), num);
  la.c_exponent = j.at("c_exponent").get<long>();
  la.swapped = j.at("swapped").get<bool>();
  return la;
}

NormalForm read_normal_form(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "FormA" && kind != "FormB") throw std::invalid_argument("unknown normal form '" + kind + "'");
  return NormalForm{kind == "FormA" ? NormalForm::Kind::FormA : NormalForm::Kind::FormB,
                    read_elem(j.at("lambda1")),
                    read_elem(j.at("lambda2")),
                    read_elem(j.at("lambda3")),
                    read_elem(j.at("sqrt_term")),
                    read_moebius(j.at("conjugator")),
                    read_map(j.at("model")),
                    Integer(j.at("extension").get<std::string>())};
}

PgrCertificate read_certificate(const Json& j) {
  return PgrCertificate{Integer(j.at("extension_t").get<std::string>()),
                        read_elem(j.at("c")),
                        read_moebius(j.at("f")),
                        read_moebius(j.at("g")),
                        read_map(j.at("source")),
                        read_map(j.at("raw")),
                        read_elem(j.at("content")),
                        read_map(j.at("result")),
                        read_elem(j.at("result_resultant")),
                        read_primes(j.at("analyzed_primes")),
                        read_opt<bool>(j.at("resultant_relation"), [](const Json& x) { return x.get<bool>(); })};
}

BadWitness read_witness(const Json& j) {
  return BadWitness{read_prime(j.at("p")), j.at("invariant").get<std::string>(), read_valuation(j.at("valuation")),
                    read_opt<Coeff>(j.at("multiplier"), read_elem)};
}

std::string join(const std::vector<Prime>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ",") + to_string(p.value());
  return out.empty() ? "none" : out;
}

}  // namespace

ReductionReport analyze(const RatMap2& m, const AnalyzeOptions& options) {
  if (!m.is_rational()) throw std::invalid_argument("analysis needs a map over Q");
  DecideOptions d{options.primes, options.construct};
  Decision decision = decide_pgr(m, d);
  const Coeff normalized = resultant(normalize_content(m));
  std::vector<Prime> ps = resultant_primes(normalized);
  if (options.primes) {
    std::erase_if(ps, [&](const Prime& p) {
      return std::find(options.primes->begin(), options.primes->end(), p) == options.primes->end();
    });
  }
  Minimality flags{{}, is_minimal_monic_criterion(m)};
  for (const auto& p : ps) flags.resultant_bound.push_back({p, is_minimal_by_resultant(m, p)});
  std::optional<bool> verified;
  if (options.verify && decision.certificate) verified = verify_certificate(*decision.certificate);
  return ReductionReport{m, resultant(m), normalized, ps, std::move(decision), std::move(flags), verified};
}

Json to_json(const ReductionReport& r) {
  const Decision& d = r.decision;
  Json local_list = Json::array();
  for (const auto& la : d.local) local_list.push_back(local(la));
  Json bound = Json::array();
  for (const auto& f : r.minimality.resultant_bound) bound.push_back({{"p", prime(f.p)}, {"minimal", f.value}});
  return {{"kind", "analyze"},
          {"input", map_json(r.input)},
          {"resultant", elem(r.input_resultant)},
          {"normalized_resultant", elem(r.normalized_resultant)},
          {"primes", primes(r.primes)},
          {"sigma", spectrum(d.spectrum)},
          {"verdict", to_string(d.verdict)},
          {"note", d.note},
          {"witness", opt(d.witness, witness)},
          {"normal_form", opt(d.normal_form, normal_form)},
          {"local", local_list},
          {"certificate", opt(d.certificate, certificate)},
          {"verified", opt(r.verified, [](bool b) { return Json(b); })},
          {"minimality", {{"resultant_bound", bound}, {"monic", r.minimality.monic}}}};
}

ReductionReport report_from_json(const Json& j) {
  try {
    if (j.at("kind") != "analyze") throw std::invalid_argument("not an analyze report");
    Decision d{read_verdict(j.at("verdict")),
               read_spectrum(j.at("sigma")),
               read_opt<NormalForm>(j.at("normal_form"), read_normal_form),
               {},
               read_opt<PgrCertificate>(j.at("certificate"), read_certificate),
               read_opt<BadWitness>(j.at("witness"), read_witness),
               j.at("note").get<std::string>()};
    for (const auto& x : j.at("local")) d.local.push_back(read_local(x));
    Minimality flags{{}, j.at("minimality").at("monic").get<bool>()};
    for (const auto& x : j.at("minimality").at("resultant_bound")) {
      flags.resultant_bound.push_back({read_prime(x.at("p")), x.at("minimal").get<bool>()});
    }
    return ReductionReport{read_map(j.at("input")),
                           read_elem(j.at("resultant")),
                           read_elem(j.at("normalized_resultant")),
                           read_primes(j.at("primes")),
                           std::move(d),
                           std::move(flags),
                           read_opt<bool>(j.at("verified"), [](const Json& x) { return x.get<bool>(); })};
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const ReductionReport& r) {
  const Decision& d = r.decision;
  std::ostringstream out;
  out << "map:        " << r.input.to_string() << "\n";
  out << "resultant:  " << r.input_resultant.to_string();
  if (!(r.normalized_resultant == r.input_resultant)) {
    out << " (integral model: " << r.normalized_resultant.to_string() << ")";
  }
  out << "\n";
  out << "sigma:      (" << d.spectrum.sigma1.to_string() << ", " << d.spectrum.sigma2.to_string() << ", "
      << d.spectrum.sigma3.to_string() << ")\n";
  if (d.spectrum.multipliers) {
    out << "multipliers:";
    for (const auto& x : *d.spectrum.multipliers) out << " " << x.to_string();
    out << "\n";
  }
  out << "verdict:    " << to_string(d.verdict) << "\n";
  if (!d.note.empty()) out << "note:       " << d.note << "\n";
  if (d.witness) {
    out << "witness:    " << d.witness->invariant << " has valuation " << d.witness->valuation.to_string() << " at p = "
        << to_string(d.witness->p.value());
    if (d.witness->multiplier) out << " (multiplier " << d.witness->multiplier->to_string() << ")";
    out << "\n";
  }
  if (d.normal_form) {
    const auto& nf = *d.normal_form;
    out << "normal form: " << kind_name(nf.kind) << " " << nf.model.to_string() << " via " << nf.conjugator.to_string()
        << "\n";
  }
  for (const auto& la : d.local) {
    out << "  p = " << to_string(la.p.value()) << ": " << to_string(la.verdict);
    if (la.c_exponent != 0) out << ", c exponent " << la.c_exponent;
    out << "\n";
  }
  if (d.certificate) {
    const auto& c = *d.certificate;
    out << "certificate:\n";
    out << "  field:     " << (c.extension_t == 1 ? std::string("Q") : "Q(sqrt(" + to_string(c.extension_t) + "))")
        << "\n";
    out << "  c:         " << c.c.to_string() << "\n";
    out << "  f:         " << c.f.to_string() << "\n";
    out << "  g:         " << c.g.to_string() << "\n";
    out << "  result:    " << c.result.to_string() << "\n";
    out << "  resultant: " << c.result_resultant.to_string() << "\n";
    out << "  primes:    " << join(c.analyzed_primes) << "\n";
  }
  if (r.verified) out << "verified:   " << (*r.verified ? "yes" : "NO") << "\n";
  out << "minimality:";
  for (const auto& f : r.minimality.resultant_bound) {
    out << " valuation<2 at " << to_string(f.p.value()) << ": " << (f.value ? "yes" : "no") << ";";
  }
  out << " monic shape: " << (r.minimality.monic ? "yes" : "no") << "\n";
  return out.str();
}

Json to_json(const SigmaReport& r) {
  return {{"kind", "sigma"}, {"input", map_json(r.input)}, {"sigma", spectrum(r.spectrum)}};
}

std::string to_text(const SigmaReport& r) {
  std::ostringstream out;
  out << "map:    " << r.input.to_string() << "\n";
  out << "sigma1: " << r.spectrum.sigma1.to_string() << "\n";
  out << "sigma2: " << r.spectrum.sigma2.to_string() << "\n";
  out << "sigma3: " << r.spectrum.sigma3.to_string() << "\n";
  if (r.spectrum.multipliers) {
    out << "multipliers:";
    for (const auto& x : *r.spectrum.multipliers) out << " " << x.to_string();
    out << "\n";
  }
  return out.str();
}

QuadpolyReport analyze_quadpoly(const Rational& c, std::optional<Integer> k) {
  QuadpolyReport r{c, std::move(k), pgr_quadratic(c), std::nullopt, std::nullopt};
  if (r.pgr.pgr) {
    r.mod4 = k4_criterion((Rational(4) * c).num());
    r.extension_model = conjugate_to_good_quadratic(c);
  }
  return r;
}

Json to_json(const QuadpolyReport& r) {
  Json j{{"kind", "quadpoly"},
         {"c", r.c.to_string()},
         {"k", opt(r.k, [](const Integer& k) { return Json(to_string(k)); })},
         {"pgr", r.pgr.pgr},
         {"failing_primes", primes(r.pgr.failing_primes)}};
  if (r.mod4) {
    j["mod4"] = {{"good_over_q", r.mod4->good_over_q},
                 {"b", r.mod4->good_over_q ? Json(to_string(r.mod4->b)) : Json(nullptr)},
                 {"c", r.mod4->good_over_q ? Json(to_string(r.mod4->c)) : Json(nullptr)},
                 {"verdict", r.mod4->good_over_q ? "GoodOverQ" : "RequiresExtension"}};
  } else {
    j["mod4"] = nullptr;
  }
  j["extension_model"] = opt(r.extension_model, certificate);
  return j;
}

std::string to_text(const QuadpolyReport& r) {
  std::ostringstream out;
  out << "polynomial: " << quadratic_map(Rational(1), Rational(0), r.c).to_string() << "\n";
  out << "pgr:        " << (r.pgr.pgr ? "true" : "false") << "\n";
  if (!r.pgr.pgr) out << "failing primes: " << join(r.pgr.failing_primes) << "\n";
  if (r.mod4) {
    if (r.mod4->good_over_q) {
      const RatMap2 model = quadratic_map(Rational(1), Rational(r.mod4->b), Rational(r.mod4->c));
      out << "over Q:     GoodOverQ " << model.to_string() << "\n";
    } else {
      out << "over Q:     RequiresExtension\n";
    }
  }
  if (r.extension_model) {
    out << "model:      " << r.extension_model->result.to_string() << " via " << r.extension_model->f.to_string()
        << "\n";
  }
  return out.str();
}

}  // namespace grd
