#include "rspunct/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rspunct::io {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return j;
}

std::vector<std::uint32_t> u32_vector(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !v.is_number_integer())
      throw std::invalid_argument(std::string(what) + ": expected integers");
    const auto x = v.get<std::int64_t>();
    if (x < 0 || x > 0xFFFFFFFFll)
      throw std::invalid_argument(std::string(what) + ": value out of range");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

double number_or_fraction(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto r = Rational::parse(j.get<std::string>());
    if (!r) throw std::invalid_argument(std::string(what) + ": malformed fraction string");
    return r->to_double();
  }
  throw std::invalid_argument(std::string(what) + ": expected a number or fraction string");
}

json offenders_json(const std::vector<Codeword>& offenders) {
  json arr = json::array();
  for (const auto& cw : offenders) arr.push_back(cw);
  return arr;
}

}  // namespace

std::string code_to_json(const RSCode& code) {
  json j;
  j["p"] = code.field().order();
  j["k"] = code.dimension();
  j["alpha"] = code.eval_points();
  return j.dump();
}

RSCode code_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("p") || !j.contains("k") || !j.contains("alpha"))
    throw std::invalid_argument("code JSON: expected {\"p\", \"k\", \"alpha\"}");
  const auto p = j.at("p").get<std::int64_t>();
  const auto k = j.at("k").get<std::int64_t>();
  if (p < 2 || p > 0x7FFFFFFFll || k < 1)
    throw std::invalid_argument("code JSON: p or k out of range");
  return RSCode(PrimeField(static_cast<std::uint32_t>(p)), static_cast<std::uint32_t>(k),
                u32_vector(j.at("alpha"), "alpha"));
}

RSCode load_code(const std::string& path) { return code_from_json(read_file(path)); }

std::string witness_to_json(const oracles::DecodingWitness& w) {
  json j;
  j["center"] = w.center;
  j["offenders"] = offenders_json(w.offenders);
  return j.dump();
}

std::string witness_to_json(const oracles::RecoveryWitness& w) {
  json j;
  j["lists"] = w.lists;
  j["offenders"] = offenders_json(w.offenders);
  return j.dump();
}

namespace {

template <typename Witness>
std::string verdict_impl(const std::optional<Witness>& w) {
  json j;
  j["decodable"] = !w.has_value();
  j["witness"] = w ? json::parse(witness_to_json(*w)) : json(nullptr);
  return j.dump();
}

}  // namespace

std::string verdict_to_json(const std::optional<oracles::DecodingWitness>& w) {
  return verdict_impl(w);
}

std::string verdict_to_json(const std::optional<oracles::RecoveryWitness>& w) {
  return verdict_impl(w);
}

std::string certificate_to_json(const certs::Certificate& cert, const RSCode& parent) {
  json j;
  j["a"] = cert.a;
  json srows = json::array();
  for (int i = 0; i < cert.S.rows; ++i) {
    json row = json::array();
    for (int jj = 0; jj < cert.S.cols; ++jj) row.push_back(cert.S.at(i, jj));
    srows.push_back(std::move(row));
  }
  j["S"] = std::move(srows);
  json msgs = json::array();
  for (const auto& g : cert.gammas) {
    const auto msg = parent.interpolate(g);
    if (!msg) throw std::invalid_argument("certificate_to_json: gamma is not a parent codeword");
    msgs.push_back(*msg);
  }
  j["gammas_msgs"] = std::move(msgs);
  // Exact round-trip: plain number when binary64 represents c exactly,
  // otherwise a "p/q" string.
  if (Rational::from_double(cert.c.to_double()) == cert.c)
    j["c"] = cert.c.to_double();
  else
    j["c"] = cert.c.str();
  j["h"] = cert.h;
  return j.dump();
}

certs::Certificate certificate_from_json(const std::string& text, const RSCode& parent) {
  const json j = parse(text);
  for (const char* key : {"a", "S", "gammas_msgs", "c", "h"})
    if (!j.is_object() || !j.contains(key))
      throw std::invalid_argument(std::string("certificate JSON: missing key \"") + key + "\"");
  certs::Certificate cert;
  cert.a = u32_vector(j.at("a"), "a");
  const json& srows = j.at("S");
  if (!srows.is_array() || srows.empty())
    throw std::invalid_argument("certificate JSON: S must be a nonempty matrix");
  cert.S.rows = static_cast<int>(srows.size());
  cert.S.cols = static_cast<int>(srows.front().size());
  for (const auto& row : srows) {
    const auto vals = u32_vector(row, "S row");
    if (static_cast<int>(vals.size()) != cert.S.cols)
      throw std::invalid_argument("certificate JSON: ragged S matrix");
    cert.S.data.insert(cert.S.data.end(), vals.begin(), vals.end());
  }
  for (const auto& msg : j.at("gammas_msgs"))
    cert.gammas.push_back(parent.encode(u32_vector(msg, "gamma message")));
  const json& c = j.at("c");
  if (c.is_string()) {
    const auto r = Rational::parse(c.get<std::string>());
    if (!r) throw std::invalid_argument("certificate JSON: malformed fraction for c");
    cert.c = *r;
  } else if (c.is_number()) {
    cert.c = Rational::from_double(c.get<double>());
  } else {
    throw std::invalid_argument("certificate JSON: c must be a number or fraction string");
  }
  cert.h = j.at("h").get<std::int64_t>();
  cert.family = certs::derive_family(cert.a, cert.S, cert.gammas);
  return cert;
}

certs::Certificate load_certificate(const std::string& path, const RSCode& parent) {
  return certificate_from_json(read_file(path), parent);
}

std::string plan_to_json(const bounds::ParamPlan& plan) {
  json j;
  j["l"] = plan.l;
  j["R"] = plan.R;
  j["eps"] = plan.eps;
  j["zeta"] = plan.zeta;
  j["L"] = plan.L;
  j["c"] = plan.c;
  j["cprime"] = plan.cprime;
  j["lambda1"] = plan.lambda1;
  j["lambda2"] = plan.lambda2;
  j["alpha"] = plan.alpha;
  j["radius"] = plan.radius;
  j["target_radius"] = plan.target_radius;
  j["qmin_exponent"] = plan.qmin_exponent;
  j["n"] = plan.n ? json(*plan.n) : json(nullptr);
  j["k"] = plan.k ? json(*plan.k) : json(nullptr);
  j["h"] = plan.h ? json(*plan.h) : json(nullptr);
  j["q_min"] = plan.q_min ? json(*plan.q_min) : json(nullptr);
  return j.dump();
}

std::string infeasible_to_json(const std::string& constraint) {
  json j;
  j["feasible"] = false;
  j["constraint"] = constraint;
  return j.dump();
}

expt::ExperimentConfig config_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw std::invalid_argument("experiment config: expected a JSON object");
  expt::ExperimentConfig cfg;
  for (const char* key : {"p", "k", "n", "r", "l", "L", "trials", "seed"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("experiment config: missing key \"") + key + "\"");
  cfg.p = j.at("p").get<std::uint32_t>();
  cfg.k = j.at("k").get<std::uint32_t>();
  cfg.n = j.at("n").get<std::uint32_t>();
  cfg.r = number_or_fraction(j.at("r"), "r");
  cfg.l = j.at("l").get<int>();
  cfg.L = j.at("L").get<int>();
  cfg.trials = j.at("trials").get<std::uint32_t>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("rng_algorithm")) cfg.rng_algorithm = j.at("rng_algorithm").get<std::string>();
  return cfg;
}

namespace {

json config_json(const expt::ExperimentConfig& cfg) {
  json j;
  j["p"] = cfg.p;
  j["k"] = cfg.k;
  j["n"] = cfg.n;
  j["r"] = cfg.r;
  j["l"] = cfg.l;
  j["L"] = cfg.L;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["rng_algorithm"] = cfg.rng_algorithm;
  return j;
}

}  // namespace

std::string summary_to_json(const expt::ExperimentSummary& summary) {
  json j;
  j["failures"] = summary.failures;
  j["trials"] = summary.cfg.trials;
  j["fraction"] = summary.fraction;
  j["chernoff_eps"] = summary.chernoff_eps;
  j["theorem_bound"] = summary.regime.bound ? json(*summary.regime.bound) : json(nullptr);
  j["out_of_regime"] = summary.regime.violated;
  j["unverifiable"] = summary.regime.unverifiable;
  j["config"] = config_json(summary.cfg);
  if (summary.aborted) {
    j["aborted"] = true;
    j["abort_reason"] = summary.abort_reason;
    j["completed"] = summary.completed;
  }
  return j.dump();
}

namespace {

std::string experiment_header(const expt::ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "# rng_algorithm=" << cfg.rng_algorithm << " seed=" << cfg.seed << "\n";
  os << "# p=" << cfg.p << " k=" << cfg.k << " n=" << cfg.n << " r=" << format_double(cfg.r)
     << " l=" << cfg.l << " L=" << cfg.L << " trials=" << cfg.trials << "\n";
  return os.str();
}

}  // namespace

std::string trials_to_csv(const expt::ExperimentSummary& summary) {
  std::ostringstream os;
  os << experiment_header(summary.cfg);
  os << "trial,a,decodable\n";
  for (size_t i = 0; i < summary.trials.size(); ++i) {
    const auto& trial = summary.trials[i];
    os << i << ",";
    for (size_t j = 0; j < trial.a.size(); ++j) os << (j ? " " : "") << trial.a[j];
    os << "," << (trial.decodable ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string failure_witnesses_to_json(const expt::ExperimentSummary& summary) {
  json arr = json::array();
  for (size_t i = 0; i < summary.trials.size(); ++i) {
    const auto& trial = summary.trials[i];
    if (trial.decodable) continue;
    json entry;
    entry["trial"] = i;
    entry["a"] = trial.a;
    const std::string w =
        trial.dec_witness ? witness_to_json(*trial.dec_witness) : witness_to_json(*trial.rec_witness);
    entry["witness"] = json::parse(w);
    arr.push_back(std::move(entry));
  }
  return arr.dump();
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

}  // namespace

std::string sweep_to_csv(const std::vector<expt::SweepRow>& rows,
                         const expt::ExperimentConfig& base, double eps) {
  std::ostringstream os;
  os << "# rng_algorithm=" << base.rng_algorithm << " seed=" << base.seed << "\n";
  os << "# p=" << base.p << " n=" << base.n << " r=" << format_double(base.r) << " l=" << base.l
     << " L=" << base.L << " trials=" << base.trials << " eps=" << format_double(eps) << "\n";
  os << "R,johnson,capacity,paper,theorem,empirical\n";
  for (const auto& row : rows) {
    os << format_double(row.R) << "," << cell(row.johnson) << "," << cell(row.capacity) << ","
       << cell(row.paper) << "," << cell(row.theorem) << "," << format_double(row.empirical)
       << "\n";
  }
  return os.str();
}

std::string curves_to_csv(const std::vector<bounds::CurveRow>& rows, int l, double eps) {
  std::ostringstream os;
  os << "# l=" << l << " eps=" << format_double(eps) << "\n";
  os << "R,johnson,capacity,paper,theorem";
  // For singleton input lists, two reference curves from the literature are
  // included for comparison: 1-15R (valid on R <= 1/15) and (3/4)(1-R).
  if (l == 1) os << ",one_minus_15R,three_quarters_one_minus_R";
  os << "\n";
  for (const auto& row : rows) {
    os << format_double(row.R) << "," << cell(row.johnson) << "," << cell(row.capacity) << ","
       << cell(row.paper) << "," << cell(row.theorem);
    if (l == 1) {
      const std::optional<double> fifteen =
          row.R <= 1.0 / 15 ? std::optional<double>(1.0 - 15 * row.R) : std::nullopt;
      os << "," << cell(fifteen) << "," << format_double(0.75 * (1.0 - row.R));
    }
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (content.empty() || content.back() != '\n') out << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rspunct::io
