#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rspunct/oracles.hpp"
#include "rspunct/rng.hpp"
#include "rspunct/rs_code.hpp"

namespace rspunct::expt {

struct ExperimentConfig {
  std::uint32_t p = 0;       // parent field size (prime): parent is full length
  std::uint32_t k = 0;       // dimension
  std::uint32_t n = 0;       // punctured length, k <= n <= p
  double r = 0;              // radius
  int l = 1;                 // input list size; l = 1 runs the decoding oracle
  int L = 1;                 // output list size
  std::uint32_t trials = 1;  // >= 1
  std::uint64_t seed = 0;
  std::string rng_algorithm = kRngAlgorithm;  // must match the pinned generator
};

struct TrialResult {
  std::vector<std::uint32_t> a;  // the sampled puncturing, 1-based
  bool decodable = true;
  std::optional<oracles::DecodingWitness> dec_witness;
  std::optional<oracles::RecoveryWitness> rec_witness;
  double elapsed_seconds = 0;  // in-memory diagnostics; never serialized
};

// What the tail-probability statement can and cannot promise at the
// configured parameters.
struct RegimeReport {
  std::optional<double> bound;            // q^(-(alpha/4)*R*n) when applicable
  std::vector<std::string> violated;      // concrete conditions that fail here
  std::vector<std::string> unverifiable;  // asymptotic conditions with no constants
  std::optional<double> c, cprime, lambda1, alpha;  // derived constants when feasible
};

// Derives c from the configured radius (the radius formula inverted for c),
// then checks every verifiable feasibility condition.
RegimeReport theorem_regime(const ExperimentConfig& cfg);

struct ExperimentSummary {
  ExperimentConfig cfg;
  std::vector<TrialResult> trials;
  std::uint32_t completed = 0;
  std::uint32_t failures = 0;
  double fraction = 0;      // failures / trials (over completed trials if aborted)
  double chernoff_eps = 0;  // 95% confidence radius from the additive tail bound
  RegimeReport regime;
  bool aborted = false;  // a resource cap stopped the run early
  std::string abort_reason;
};

// Uniform ordered n-tuple of distinct positions in [1, p].
std::vector<std::uint32_t> sample_puncturing(std::uint32_t p, std::uint32_t n,
                                             std::mt19937_64& rng);

// Runs cfg.trials independent trials: sample a puncturing, build the
// punctured code, ask the oracle. Trial i draws from a fresh generator
// seeded with substream_seed(cfg.seed, i), so results are identical however
// trials are scheduled.
ExperimentSummary run_experiment(const ExperimentConfig& cfg,
                                 const oracles::SearchOptions& opts = {});

struct SweepRow {
  double R = 0;
  std::uint32_t k = 0;  // realized dimension round(R*n)
  std::optional<double> johnson, capacity, paper, theorem;
  double empirical = 0;  // failure fraction at this rate
};

// One experiment per grid rate with k = round(R*n) (same seed each row, so
// rows reuse the same sampled tuples), next to the four analytic curves.
std::vector<SweepRow> sweep_rates(const ExperimentConfig& base, const std::vector<double>& grid,
                                  double eps, const oracles::SearchOptions& opts = {});

}  // namespace rspunct::expt
