// Python bindings. Field elements cross the boundary as exact strings;
// reports come back as JSON text decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grd/expr.hpp"
#include "grd/report.hpp"

namespace py = pybind11;

namespace {

grd::AnalyzeOptions make_options(std::optional<std::vector<long long>> primes, bool construct, bool verify) {
  grd::AnalyzeOptions o;
  if (primes) {
    std::vector<grd::Prime> ps;
    for (long long p : *primes) ps.emplace_back(p);
    o.primes = std::move(ps);
  }
  o.construct = construct;
  o.verify = verify;
  return o;
}

std::vector<std::string> form_strings(const grd::QuadForm& q) {
  return {q[0].to_string(), q[1].to_string(), q[2].to_string()};
}

}  // namespace

PYBIND11_MODULE(_pygrd, m) {
  m.doc() = "exact potential-good-reduction analysis of degree-2 rational maps";

  py::register_exception<grd::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<grd::NotConstructible>(m, "NotConstructible", PyExc_RuntimeError);

  m.def(
      "parse_map",
      [](const std::string& text) {
        const grd::RatMap2 r = grd::parse_map(text);
        return py::make_tuple(form_strings(r.f()), form_strings(r.g()));
      },
      py::arg("text"), "Coefficient strings (F, G), each ordered z^2, z, 1.");

  m.def(
      "resultant", [](const std::string& text) { return grd::resultant(grd::parse_map(text)).to_string(); },
      py::arg("text"));

  m.def(
      "sigma",
      [](const std::string& text) {
        const auto s = grd::sigma_invariants(grd::parse_map(text));
        return py::make_tuple(s.sigma1.to_string(), s.sigma2.to_string(), s.sigma3.to_string());
      },
      py::arg("text"));

  m.def(
      "analyze_json",
      [](const std::string& text, std::optional<std::vector<long long>> primes, bool construct, bool verify) {
        return grd::to_json(grd::analyze(grd::parse_map(text), make_options(std::move(primes), construct, verify)))
            .dump();
      },
      py::arg("text"), py::arg("primes") = py::none(), py::arg("construct") = true, py::arg("verify") = true);

  m.def(
      "roundtrip_json",
      [](const std::string& report) { return grd::to_json(grd::report_from_json(grd::Json::parse(report))).dump(); },
      py::arg("report"), "Decode a report and encode it again.");

  m.def(
      "quadpoly_json",
      [](std::optional<long long> k, std::optional<std::string> c) {
        if (k.has_value() == c.has_value()) throw std::invalid_argument("give exactly one of k, c");
        if (k) return grd::to_json(grd::analyze_quadpoly(grd::Rational(*k) / grd::Rational(4), grd::Integer(static_cast<long>(*k)))).dump();
        return grd::to_json(grd::analyze_quadpoly(grd::Rational::parse(*c))).dump();
      },
      py::arg("k") = py::none(), py::arg("c") = py::none());

  m.def("k4_criterion", [](long long k) {
    const auto r = grd::k4_criterion(grd::Integer(static_cast<long>(k)));
    return py::make_tuple(r.good_over_q, grd::to_string(r.b), grd::to_string(r.c));
  });
}
