#include "rspunct/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rspunct/bounds.hpp"
#include "rspunct/errors.hpp"

namespace rspunct::expt {

namespace {

// ln(20)/2: solving exp(-2*eps^2*s) = 0.05 for eps gives sqrt(ln(20)/(2s)).
constexpr double kHalfLog20 = 1.4978661367769954;

void validate_config(const ExperimentConfig& cfg) {
  PrimeField field(cfg.p);  // validates primality
  if (cfg.k < 1 || cfg.k > cfg.n || cfg.n > cfg.p)
    throw std::invalid_argument("experiment: need 1 <= k <= n <= p");
  if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  if (cfg.r < 0) throw std::invalid_argument("experiment: radius must be >= 0");
  if (cfg.l < 1 || cfg.L < 1) throw std::invalid_argument("experiment: need l >= 1 and L >= 1");
  if (cfg.rng_algorithm != kRngAlgorithm)
    throw std::invalid_argument("experiment: rng_algorithm must be \"" +
                                std::string(kRngAlgorithm) + "\"");
}

}  // namespace

std::vector<std::uint32_t> sample_puncturing(std::uint32_t p, std::uint32_t n,
                                             std::mt19937_64& rng) {
  return sample_distinct_positions(p, n, rng);
}

RegimeReport theorem_regime(const ExperimentConfig& cfg) {
  RegimeReport report;
  report.unverifiable.push_back(
      "n and q large enough (asymptotic; the statement fixes no explicit constants)");
  const double R = static_cast<double>(cfg.k) / cfg.n;
  const int l = cfg.l;
  const int L = cfg.L;
  // Invert the radius formula r = 1 - (l + L*c*R)/(L+1) for c.
  const double c = ((1.0 - cfg.r) * (L + 1) - l) / (static_cast<double>(L) * R);
  try {
    const auto [lo, hi] = bounds::feasible_c_interval(R, l);
    if (!(c > lo + bounds::kStrictTol))
      throw InfeasibleError("derived c = " + std::to_string(c) + " not above (l+1)/(R+1) = " +
                            std::to_string(lo) + " (radius too large for this L)");
    if (!(c < hi - bounds::kStrictTol))
      throw InfeasibleError("derived c = " + std::to_string(c) + " not below l/R = " +
                            std::to_string(hi));
    const auto [cp_lo, cp_hi] = bounds::feasible_cprime_interval(c, R, l);
    const double cp = (cp_lo + cp_hi) / 2;
    const auto [lam_lo, lam_hi] = bounds::lambda_interval(c, cp, R, l);
    const double lambda1 = lam_lo + (lam_hi - lam_lo) / 3;
    const double alpha = bounds::alpha(l, c, cp, R, lambda1);
    report.c = c;
    report.cprime = cp;
    report.lambda1 = lambda1;
    report.alpha = alpha;
    // Field-size condition R*n <= q^(1-1/c') + 1, i.e. defect k-1 within bound.
    const double qpow = std::pow(static_cast<double>(cfg.p), 1.0 - 1.0 / cp);
    if (static_cast<double>(cfg.k) > qpow + 1.0 + bounds::kStrictTol)
      report.violated.push_back("field too small: R*n = " + std::to_string(cfg.k) +
                                " exceeds q^(1-1/c')+1 = " + std::to_string(qpow + 1.0));
    if (!(static_cast<double>(cfg.k) > 6.0))
      report.violated.push_back("R*n > 6 required by the tail bound; have R*n = " +
                                std::to_string(cfg.k));
    if (report.violated.empty())
      report.bound = std::pow(static_cast<double>(cfg.p), -(alpha / 4) * R * cfg.n);
  } catch (const InfeasibleError& e) {
    report.violated.push_back(e.what());
  }
  return report;
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg, const oracles::SearchOptions& opts) {
  validate_config(cfg);
  const RSCode parent = RSCode::full_length(cfg.p, cfg.k);

  ExperimentSummary summary;
  summary.cfg = cfg;
  summary.chernoff_eps = std::sqrt(kHalfLog20 / cfg.trials);
  summary.regime = theorem_regime(cfg);
  summary.trials.reserve(cfg.trials);

  for (std::uint32_t i = 0; i < cfg.trials; ++i) {
    std::mt19937_64 rng(substream_seed(cfg.seed, i));
    TrialResult trial;
    trial.a = sample_puncturing(cfg.p, cfg.n, rng);
    const auto started = std::chrono::steady_clock::now();
    try {
      const RSCode code = parent.punctured(trial.a);
      if (cfg.l == 1) {
        trial.dec_witness = oracles::list_decoding_witness_search(code, cfg.r, cfg.L, opts);
        trial.decodable = !trial.dec_witness.has_value();
      } else {
        trial.rec_witness = oracles::list_recovery_witness_search(code, cfg.r, cfg.l, cfg.L, opts);
        trial.decodable = !trial.rec_witness.has_value();
      }
    } catch (const CapExceededError& e) {
      summary.aborted = true;
      summary.abort_reason = e.what();
      break;
    }
    trial.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (!trial.decodable) ++summary.failures;
    summary.trials.push_back(std::move(trial));
    ++summary.completed;
  }
  const std::uint32_t denom = summary.aborted ? std::max(summary.completed, 1u) : cfg.trials;
  summary.fraction = static_cast<double>(summary.failures) / denom;
  return summary;
}

std::vector<SweepRow> sweep_rates(const ExperimentConfig& base, const std::vector<double>& grid,
                                  double eps, const oracles::SearchOptions& opts) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const double R : grid) {
    if (!(R > 0 && R < 1)) throw std::invalid_argument("sweep_rates: grid rates must be in (0,1)");
    SweepRow row;
    row.R = R;
    row.k = static_cast<std::uint32_t>(
        std::clamp(std::llround(R * base.n), 1ll, static_cast<long long>(base.n)));
    row.johnson = bounds::johnson_radius(R, base.l);
    row.capacity = bounds::capacity_radius(R);
    try {
      row.paper = bounds::paper_radius(R, base.l);
    } catch (const InfeasibleError&) {
    }
    try {
      row.theorem = bounds::plan_parameters(base.l, R, eps, eps).radius;
    } catch (const InfeasibleError&) {
    }
    ExperimentConfig cfg = base;
    cfg.k = row.k;
    const auto summary = run_experiment(cfg, opts);
    if (summary.aborted)
      throw CapExceededError("sweep_rates: aborted at R = " + std::to_string(R) + ": " +
                             summary.abort_reason);
    row.empirical = summary.fraction;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rspunct::expt
