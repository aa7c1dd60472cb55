// grd: potential good reduction of quadratic rational maps.

#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "grd/expr.hpp"
#include "grd/report.hpp"

namespace {

struct Flags {
  bool json = false;
  std::string primes;
  bool no_construct = false;
  bool verify = true;
};

std::vector<grd::Prime> parse_primes(const std::string& text) {
  std::vector<grd::Prime> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in --primes");
    for (char ch : item) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad prime '" + item + "'");
    }
    out.emplace_back(grd::Integer(item));
  }
  return out;
}

grd::AnalyzeOptions options_from(const Flags& f) {
  grd::AnalyzeOptions o;
  if (!f.primes.empty()) o.primes = parse_primes(f.primes);
  o.construct = !f.no_construct;
  o.verify = f.verify;
  return o;
}

std::string analyze_line(const std::string& expr, const grd::AnalyzeOptions& o) {
  try {
    return grd::to_json(grd::analyze(grd::parse_map(expr), o)).dump();
  } catch (const std::exception& e) {
    return grd::Json{{"kind", "error"}, {"input", expr}, {"error", e.what()}}.dump();
  }
}

int run_batch(const Flags& flags) {
  const grd::AnalyzeOptions o = options_from(flags);
  std::vector<std::string> lines;
  for (std::string line; std::getline(std::cin, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  std::vector<std::string> results(lines.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < lines.size(); i += workers) results[i] = analyze_line(lines[i], o);
    }));
  }
  for (auto& f : pool) f.get();
  bool failed = false;
  for (const auto& r : results) {
    std::cout << r << "\n";
    failed = failed || r.rfind("{\"error\"", 0) == 0;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Potential good reduction of degree-2 rational maps"};
  app.require_subcommand(1);

  Flags flags;
  std::string expr;
  auto add_analysis_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "machine-readable output");
    sub->add_option("--primes", flags.primes, "restrict analysis to these primes, e.g. 2,3");
    sub->add_flag("--no-construct", flags.no_construct, "decide only, no conjugator");
    sub->add_flag("--verify,!--no-verify", flags.verify, "re-check the certificate (default on)");
  };

  auto* analyze = app.add_subcommand("analyze", "decide potential good reduction and build a good model");
  analyze->add_option("expr", expr, "map in z, e.g. \"(z^2-2*z)/(-2*z+1)\"; - reads one per line from stdin")
      ->required();
  add_analysis_flags(analyze);

  auto* sigma = app.add_subcommand("sigma", "multiplier invariants sigma1, sigma2, sigma3");
  sigma->add_option("expr", expr, "map in z")->required();
  sigma->add_flag("--json", flags.json, "machine-readable output");

  std::string k_text, c_text;
  auto* quad = app.add_subcommand("quadpoly", "z^2 + c, or z^2 + k/4 with --k");
  auto* k_opt = quad->add_option("--k", k_text, "integer k, c = k/4");
  auto* c_opt = quad->add_option("--c", c_text, "rational c");
  k_opt->excludes(c_opt);
  quad->add_flag("--json", flags.json, "machine-readable output");

  auto* batch = app.add_subcommand("batch", "analyze one expression per line from stdin, one JSON object per line");
  batch->add_option("--primes", flags.primes, "restrict analysis to these primes");
  batch->add_flag("--no-construct", flags.no_construct, "decide only");
  batch->add_flag("--verify,!--no-verify", flags.verify, "re-check certificates (default on)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze && expr == "-") return run_batch(flags);
    if (*analyze) {
      const grd::ReductionReport r = grd::analyze(grd::parse_map(expr), options_from(flags));
      std::cout << (flags.json ? grd::to_json(r).dump(2) + "\n" : grd::to_text(r));
      return r.verified == false ? 2 : 0;
    }
    if (*sigma) {
      const grd::RatMap2 m = grd::parse_map(expr);
      const grd::SigmaReport r{m, grd::sigma_invariants(m)};
      std::cout << (flags.json ? grd::to_json(r).dump(2) + "\n" : grd::to_text(r));
      return 0;
    }
    if (*quad) {
      if (k_opt->count() == 0 && c_opt->count() == 0) throw std::invalid_argument("quadpoly needs --k or --c");
      grd::QuadpolyReport r = k_opt->count() ? [&] {
        const grd::Rational k = grd::Rational::parse(k_text);
        if (!k.is_integer()) throw std::invalid_argument("--k must be an integer");
        return grd::analyze_quadpoly(k / grd::Rational(4), k.num());
      }()
                                             : grd::analyze_quadpoly(grd::Rational::parse(c_text));
      std::cout << (flags.json ? grd::to_json(r).dump(2) + "\n" : grd::to_text(r));
      return 0;
    }
    if (*batch) return run_batch(flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
