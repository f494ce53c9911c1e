#include "rspunct/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "rspunct/bounds.hpp"
#include "rspunct/certificates.hpp"
#include "rspunct/errors.hpp"
#include "rspunct/experiments.hpp"
#include "rspunct/json_io.hpp"
#include "rspunct/oracles.hpp"
#include "rspunct/rational.hpp"
#include "rspunct/rs_code.hpp"
#include "rspunct/selftest.hpp"

namespace rspunct::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitWitness = 3;
constexpr int kExitCap = 4;

double parse_fraction(const std::string& text, const char* what, double lo, double hi,
                      bool lo_open, bool hi_open) {
  const auto r = Rational::parse(text);
  if (!r) throw std::invalid_argument(std::string(what) + ": expected a decimal or \"p/q\" fraction");
  const double v = r->to_double();
  const bool above = lo_open ? v > lo : v >= lo;
  const bool below = hi_open ? v < hi : v <= hi;
  if (!above || !below)
    throw std::invalid_argument(std::string(what) + " = " + text + " out of range");
  return v;
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& content) {
  if (path) {
    io::write_file(*path, content);
  } else {
    out << content;
    if (content.empty() || content.back() != '\n') out << '\n';
  }
}

struct CommonOpts {
  oracles::SearchOptions search;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reed-Solomon puncturing laboratory: trade-off curves, parameter planning, "
               "exact list-decoding/recovery oracles, bad-puncturing certificates, and "
               "Monte Carlo puncturing experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts common;
  app.add_option("--jobs", common.search.jobs, "Worker threads for searches (default 1)")
      ->envname("RSPUNCT_JOBS")
      ->check(CLI::Range(1, 1024));
  app.add_option("--enum-cap", common.search.caps.enumeration,
                 "Max codewords to enumerate (q^k)")
      ->envname("RSPUNCT_ENUM_CAP");
  app.add_option("--subset-cap", common.search.caps.subsets, "Max codeword subsets to scan")
      ->envname("RSPUNCT_SUBSET_CAP");
  app.add_option("--state-cap", common.search.caps.states, "Max DP states per subset")
      ->envname("RSPUNCT_STATE_CAP");
  app.add_option("--center-cap", common.search.caps.centers, "Max centers in the naive oracle")
      ->envname("RSPUNCT_CENTER_CAP");
  app.add_option("--tuple-cap", common.search.caps.tuples,
                 "Max coordinate tuples in exhaustive counting")
      ->envname("RSPUNCT_TUPLE_CAP");

  // ---- plan ----
  auto* plan_cmd = app.add_subcommand("plan", "Derive a full feasible parameter assignment");
  int plan_l = 1;
  std::string plan_rate, plan_eps = "0.1", plan_zeta;
  std::optional<std::uint32_t> plan_n;
  std::optional<std::string> plan_out;
  plan_cmd->add_option("--l", plan_l, "Input list size")->required()->check(CLI::Range(1, 64));
  plan_cmd->add_option("--rate", plan_rate, "Code rate in (0,1), decimal or p/q")->required();
  plan_cmd->add_option("--eps", plan_eps, "Radius gap in (0,1) (default 0.1)");
  plan_cmd->add_option("--zeta", plan_zeta, "List-size slack in (0, eps] (default eps)");
  plan_cmd->add_option("--n", plan_n, "Optional punctured length for h and field-size bound");
  plan_cmd->add_option("--out", plan_out, "Write JSON here instead of stdout");

  // ---- curves ----
  auto* curves_cmd = app.add_subcommand("curves", "Emit the rate/radius trade-off curve table");
  int curves_l = 1;
  std::string curves_rmin = "0.01", curves_rmax = "0.99", curves_eps = "0.1";
  int curves_steps = 50;
  std::optional<std::string> curves_out;
  curves_cmd->add_option("--l", curves_l, "Input list size")->required()->check(CLI::Range(1, 64));
  curves_cmd->add_option("--rmin", curves_rmin, "Smallest rate (default 0.01)");
  curves_cmd->add_option("--rmax", curves_rmax, "Largest rate (default 0.99)");
  curves_cmd->add_option("--steps", curves_steps, "Grid points (default 50)");
  curves_cmd->add_option("--eps", curves_eps, "Gap for the planned-radius column (default 0.1)");
  curves_cmd->add_option("--out", curves_out, "Write CSV here instead of stdout");

  // ---- verify ----
  auto* verify_cmd =
      app.add_subcommand("verify", "Decide list-decodability/recoverability of a code exactly");
  std::string verify_code, verify_r, verify_mode = "ld";
  int verify_l = 1, verify_L = 1;
  std::optional<std::string> verify_out;
  verify_cmd->add_option("--code", verify_code, "Code JSON file {\"p\",\"k\",\"alpha\"}")
      ->required();
  verify_cmd->add_option("--r", verify_r, "Radius in [0,1], decimal or p/q")->required();
  verify_cmd->add_option("--l", verify_l, "Input list size (lr mode)")->check(CLI::Range(1, 64));
  verify_cmd->add_option("--L", verify_L, "Output list size")->required()->check(CLI::Range(1, 63));
  verify_cmd->add_option("--mode", verify_mode, "ld or lr (default ld)")
      ->check(CLI::IsMember({"ld", "lr"}));
  verify_cmd->add_option("--out", verify_out, "Write verdict JSON here instead of stdout");

  // ---- sample ----
  auto* sample_cmd =
      app.add_subcommand("sample", "Monte Carlo random-puncturing experiment or rate sweep");
  std::optional<std::string> sample_config;
  std::uint32_t sample_p = 0, sample_k = 0, sample_n = 0, sample_trials = 100;
  std::string sample_r;
  int sample_l = 1, sample_L = 1;
  std::uint64_t sample_seed = 0;
  std::optional<std::string> sample_csv, sample_summary, sample_witnesses;
  std::string sweep_rmin = "0.1", sweep_rmax = "0.5", sweep_eps = "0.1";
  int sweep_steps = 0;
  sample_cmd->add_option("--config", sample_config, "Experiment config JSON file");
  auto* opt_p = sample_cmd->add_option("--p", sample_p, "Parent field size (prime)");
  auto* opt_k = sample_cmd->add_option("--k", sample_k, "Dimension");
  auto* opt_n = sample_cmd->add_option("--n", sample_n, "Punctured length");
  auto* opt_r = sample_cmd->add_option("--r", sample_r, "Radius in [0,1], decimal or p/q");
  auto* opt_l = sample_cmd->add_option("--l", sample_l, "Input list size (1 = decoding oracle)");
  auto* opt_L = sample_cmd->add_option("--L", sample_L, "Output list size");
  auto* opt_trials = sample_cmd->add_option("--trials", sample_trials, "Trial count (default 100)");
  auto* opt_seed = sample_cmd->add_option("--seed", sample_seed, "Master seed (default 0)");
  sample_cmd->add_option("--csv", sample_csv, "Write per-trial CSV (or sweep CSV) here");
  sample_cmd->add_option("--summary", sample_summary, "Write summary JSON here");
  sample_cmd->add_option("--witnesses", sample_witnesses, "Write failure witnesses JSON here");
  sample_cmd->add_option("--steps", sweep_steps, "Enable sweep mode with this many rate grid points");
  sample_cmd->add_option("--rmin", sweep_rmin, "Sweep: smallest rate (default 0.1)");
  sample_cmd->add_option("--rmax", sweep_rmax, "Sweep: largest rate (default 0.5)");
  sample_cmd->add_option("--eps", sweep_eps, "Sweep: gap for the planned-radius column");

  // ---- certify ----
  auto* certify_cmd = app.add_subcommand("certify", "Validate a bad-puncturing certificate");
  std::string certify_cert, certify_code;
  certify_cmd->add_option("--cert", certify_cert, "Certificate JSON file")->required();
  certify_cmd->add_option("--code", certify_code, "Parent code JSON file")->required();

  // ---- selftest ----
  auto* selftest_cmd =
      app.add_subcommand("selftest", "Run the embedded acceptance suite (curves, planner, "
                         "oracle equivalence, certificates, experiments)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*plan_cmd) {
      const double rate = parse_fraction(plan_rate, "--rate", 0, 1, true, true);
      const double eps = parse_fraction(plan_eps, "--eps", 0, 1, true, true);
      const double zeta =
          plan_zeta.empty() ? eps : parse_fraction(plan_zeta, "--zeta", 0, 1, true, false);
      try {
        const auto plan = bounds::plan_parameters(plan_l, rate, eps, zeta, plan_n);
        emit(out, plan_out, io::plan_to_json(plan));
        return kExitOk;
      } catch (const InfeasibleError& e) {
        emit(out, plan_out, io::infeasible_to_json(e.what()));
        return kExitInfeasible;
      }
    }

    if (*curves_cmd) {
      const double rmin = parse_fraction(curves_rmin, "--rmin", 0, 1, true, true);
      const double rmax = parse_fraction(curves_rmax, "--rmax", 0, 1, true, true);
      const double eps = parse_fraction(curves_eps, "--eps", 0, 1, true, true);
      const auto rows = bounds::curve_table(curves_l, eps, rmin, rmax, curves_steps);
      emit(out, curves_out, io::curves_to_csv(rows, curves_l, eps));
      return kExitOk;
    }

    if (*verify_cmd) {
      const RSCode code = io::load_code(verify_code);
      const double r = parse_fraction(verify_r, "--r", 0, 1, false, false);
      std::string verdict;
      bool decodable = false;
      if (verify_mode == "ld") {
        const auto witness = oracles::list_decoding_witness_search(code, r, verify_L, common.search);
        decodable = !witness.has_value();
        verdict = io::verdict_to_json(witness);
      } else {
        const auto witness =
            oracles::list_recovery_witness_search(code, r, verify_l, verify_L, common.search);
        decodable = !witness.has_value();
        verdict = io::verdict_to_json(witness);
      }
      emit(out, verify_out, verdict);
      return decodable ? kExitOk : kExitWitness;
    }

    if (*sample_cmd) {
      expt::ExperimentConfig cfg;
      if (sample_config) cfg = io::config_from_json(io::read_file(*sample_config));
      if (opt_p->count()) cfg.p = sample_p;
      if (opt_k->count()) cfg.k = sample_k;
      if (opt_n->count()) cfg.n = sample_n;
      if (opt_r->count() || !sample_config)
        cfg.r = parse_fraction(sample_r.empty() ? "0" : sample_r, "--r", 0, 1, false, false);
      if (opt_l->count()) cfg.l = sample_l;
      if (opt_L->count()) cfg.L = sample_L;
      if (opt_trials->count() || !sample_config) cfg.trials = sample_trials;
      if (opt_seed->count() || !sample_config) cfg.seed = sample_seed;
      if (!sample_config && (!opt_p->count() || !opt_k->count() || !opt_n->count() ||
                             !opt_r->count()))
        throw std::invalid_argument("sample: need --config or all of --p --k --n --r");

      if (sweep_steps > 0) {
        const double rmin = parse_fraction(sweep_rmin, "--rmin", 0, 1, true, true);
        const double rmax = parse_fraction(sweep_rmax, "--rmax", 0, 1, true, true);
        const double eps = parse_fraction(sweep_eps, "--eps", 0, 1, true, true);
        if (!(rmin <= rmax)) throw std::invalid_argument("sample: need --rmin <= --rmax");
        std::vector<double> grid;
        for (int i = 0; i < sweep_steps; ++i)
          grid.push_back(sweep_steps == 1 ? rmin : rmin + (rmax - rmin) * i / (sweep_steps - 1));
        const auto rows = expt::sweep_rates(cfg, grid, eps, common.search);
        emit(out, sample_csv, io::sweep_to_csv(rows, cfg, eps));
        return kExitOk;
      }

      const auto summary = expt::run_experiment(cfg, common.search);
      if (sample_csv) io::write_file(*sample_csv, io::trials_to_csv(summary));
      if (sample_witnesses) io::write_file(*sample_witnesses, io::failure_witnesses_to_json(summary));
      emit(out, sample_summary, io::summary_to_json(summary));
      if (summary.aborted) {
        err << "aborted: " << summary.abort_reason << "\n";
        return kExitCap;
      }
      return kExitOk;
    }

    if (*certify_cmd) {
      const RSCode parent = io::load_code(certify_code);
      const auto cert = io::load_certificate(certify_cert, parent);
      const auto result = certs::check_certificate_detailed(cert, parent);
      if (result.valid) {
        out << "valid\n";
        return kExitOk;
      }
      out << "invalid: condition " << result.first_violated << "\n";
      return kExitWitness;
    }

    if (*selftest_cmd) {
      const int failures = run_selftest(out, common.search);
      return failures == 0 ? kExitOk : kExitUsage;
    }
  } catch (const CapExceededError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rspunct::cli
