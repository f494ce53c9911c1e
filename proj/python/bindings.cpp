#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rspunct/bounds.hpp"
#include "rspunct/certificates.hpp"
#include "rspunct/errors.hpp"
#include "rspunct/experiments.hpp"
#include "rspunct/json_io.hpp"
#include "rspunct/oracles.hpp"
#include "rspunct/rational.hpp"
#include "rspunct/rng.hpp"
#include "rspunct/rs_code.hpp"

namespace py = pybind11;
using namespace rspunct;

namespace {

oracles::SearchOptions make_opts(int jobs) {
  oracles::SearchOptions opts;
  opts.jobs = jobs;
  return opts;
}

Rational parse_rational(const std::string& text) {
  const auto r = Rational::parse(text);
  if (!r) throw std::invalid_argument("expected a decimal or \"p/q\" fraction: " + text);
  return *r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Reed-Solomon puncturing laboratory: code construction, rate/radius trade-off "
      "curves, exact list-decoding/recovery oracles, bad-puncturing certificates, and "
      "Monte Carlo puncturing experiments";

  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

  m.attr("RNG_ALGORITHM") = kRngAlgorithm;

  py::class_<PrimeField>(m, "PrimeField")
      .def(py::init<std::uint32_t>(), py::arg("p"))
      .def_property_readonly("order", &PrimeField::order)
      .def("add", &PrimeField::add)
      .def("sub", &PrimeField::sub)
      .def("mul", &PrimeField::mul)
      .def("neg", &PrimeField::neg)
      .def("inv", &PrimeField::inv)
      .def("pow", &PrimeField::pow)
      .def("elements", &PrimeField::elements)
      .def_static("is_prime", &PrimeField::is_prime, py::arg("n"))
      .def("__repr__",
           [](const PrimeField& f) { return "PrimeField(" + std::to_string(f.order()) + ")"; });

  py::class_<RSCode>(m, "RSCode")
      .def(py::init<PrimeField, std::uint32_t, std::vector<std::uint32_t>>(), py::arg("field"),
           py::arg("k"), py::arg("alpha"))
      .def_static("full_length", &RSCode::full_length, py::arg("p"), py::arg("k"))
      .def_property_readonly("p", [](const RSCode& c) { return c.field().order(); })
      .def_property_readonly("k", &RSCode::dimension)
      .def_property_readonly("n", &RSCode::length)
      .def_property_readonly("alpha", &RSCode::eval_points)
      .def_property_readonly("rate", &RSCode::rate)
      .def("encode", &RSCode::encode, py::arg("message"))
      .def("interpolate", &RSCode::interpolate, py::arg("word"))
      .def("punctured", &RSCode::punctured, py::arg("positions"))
      .def("codeword_count", &RSCode::codeword_count)
      .def("min_distance", &RSCode::min_distance_bruteforce,
           py::arg("cap") = kDefaultEnumerationCap)
      .def("to_json", [](const RSCode& c) { return io::code_to_json(c); })
      .def_static("from_json", &io::code_from_json, py::arg("text"))
      .def("__repr__", [](const RSCode& c) {
        return "RSCode(p=" + std::to_string(c.field().order()) +
               ", k=" + std::to_string(c.dimension()) + ", n=" + std::to_string(c.length()) + ")";
      });

  // Trade-off curves and the parameter planner.
  m.def("johnson_radius", &bounds::johnson_radius, py::arg("R"), py::arg("l"));
  m.def("capacity_radius", &bounds::capacity_radius, py::arg("R"));
  m.def("paper_radius", &bounds::paper_radius, py::arg("R"), py::arg("l"));
  m.def("theorem_radius", &bounds::theorem_radius, py::arg("l"), py::arg("L"), py::arg("c"),
        py::arg("R"));
  m.def("list_size", &bounds::list_size, py::arg("zeta"), py::arg("l"));
  m.def("field_size_bound", &bounds::field_size_bound, py::arg("n"), py::arg("cprime"));
  m.def("chernoff_tail", &bounds::chernoff_tail, py::arg("eps"), py::arg("s"));
  m.def(
      "plan_json",
      [](int l, double rate, double eps, std::optional<double> zeta,
         std::optional<std::uint32_t> n) {
        return io::plan_to_json(bounds::plan_parameters(l, rate, eps, zeta.value_or(eps), n));
      },
      py::arg("l"), py::arg("rate"), py::arg("eps") = 0.1, py::arg("zeta") = py::none(),
      py::arg("n") = py::none());
  m.def(
      "curves_csv",
      [](int l, double eps, double rmin, double rmax, int steps) {
        return io::curves_to_csv(bounds::curve_table(l, eps, rmin, rmax, steps), l, eps);
      },
      py::arg("l"), py::arg("eps") = 0.1, py::arg("rmin") = 0.01, py::arg("rmax") = 0.99,
      py::arg("steps") = 50);

  // Exact oracles. The witness returns serialize to JSON; None means no
  // violation exists (the code is decodable/recoverable at these parameters).
  m.def(
      "list_decoding_witness_json",
      [](const RSCode& code, double r, int L, int jobs) -> std::optional<std::string> {
        const auto w = oracles::list_decoding_witness_search(code, r, L, make_opts(jobs));
        if (!w) return std::nullopt;
        return io::witness_to_json(*w);
      },
      py::arg("code"), py::arg("r"), py::arg("L"), py::arg("jobs") = 1);
  m.def(
      "list_recovery_witness_json",
      [](const RSCode& code, double r, int l, int L, int jobs) -> std::optional<std::string> {
        const auto w = oracles::list_recovery_witness_search(code, r, l, L, make_opts(jobs));
        if (!w) return std::nullopt;
        return io::witness_to_json(*w);
      },
      py::arg("code"), py::arg("r"), py::arg("l"), py::arg("L"), py::arg("jobs") = 1);
  m.def(
      "is_list_decodable",
      [](const RSCode& code, double r, int L, int jobs) {
        return oracles::is_list_decodable(code, r, L, make_opts(jobs));
      },
      py::arg("code"), py::arg("r"), py::arg("L"), py::arg("jobs") = 1);
  m.def(
      "is_list_recoverable",
      [](const RSCode& code, double r, int l, int L, int jobs) {
        return oracles::is_list_recoverable(code, r, l, L, make_opts(jobs));
      },
      py::arg("code"), py::arg("r"), py::arg("l"), py::arg("L"), py::arg("jobs") = 1);
  m.def("error_budget", &oracles::error_budget, py::arg("r"), py::arg("n"));

  // Certificates.
  m.def(
      "check_certificate_json",
      [](const std::string& cert_json, const RSCode& parent) {
        const auto cert = io::certificate_from_json(cert_json, parent);
        const auto result = certs::check_certificate_detailed(cert, parent);
        return py::make_tuple(result.valid, result.first_violated);
      },
      py::arg("cert_json"), py::arg("parent"),
      "Returns (valid, first_violated); first_violated is 0 when valid");
  m.def(
      "count_bad_puncturings",
      [](const RSCode& parent, std::uint32_t n, int l, int L, const std::string& c, int jobs) {
        const auto res = certs::count_bad_puncturings(parent, n, l, L, parse_rational(c),
                                                      make_opts(jobs));
        py::dict out;
        out["bad_count"] = res.bad_count;
        out["tuples"] = res.tuples;
        out["theorem_bound"] = res.theorem_bound ? py::cast(*res.theorem_bound) : py::none();
        out["regime_notes"] = res.regime_notes;
        return out;
      },
      py::arg("parent"), py::arg("n"), py::arg("l"), py::arg("L"), py::arg("c"),
      py::arg("jobs") = 1);

  // Monte Carlo puncturing experiments.
  m.def(
      "run_experiment_json",
      [](const std::string& config_json, int jobs) {
        return io::summary_to_json(expt::run_experiment(io::config_from_json(config_json),
                                                        make_opts(jobs)));
      },
      py::arg("config_json"), py::arg("jobs") = 1);
  m.def(
      "sweep_csv",
      [](const std::string& config_json, const std::vector<double>& grid, double eps, int jobs) {
        const auto cfg = io::config_from_json(config_json);
        return io::sweep_to_csv(expt::sweep_rates(cfg, grid, eps, make_opts(jobs)), cfg, eps);
      },
      py::arg("config_json"), py::arg("grid"), py::arg("eps") = 0.1, py::arg("jobs") = 1);

  m.def("substream_seed", &substream_seed, py::arg("master"), py::arg("index"));
}
