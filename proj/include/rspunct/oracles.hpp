#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rspunct/rs_code.hpp"

namespace rspunct::oracles {

// Resource guards for the brute-force searches. Exceeding any of them raises
// CapExceededError ("refused", never a verdict).
struct SearchCaps {
  std::uint64_t enumeration = 1'000'000;   // codewords (q^k)
  std::uint64_t subsets = 10'000'000;      // (L+1)-subsets of codewords
  std::uint64_t states = 10'000'000;       // memoized DP states per subset
  std::uint64_t centers = 10'000'000;      // centers (q^n) in the naive oracle
  std::uint64_t tuples = 1'000'000;        // coordinate tuples in exhaustive counting
};

struct SearchOptions {
  SearchCaps caps;
  int jobs = 1;  // worker threads for subset/tuple scans; results independent of jobs
};

// The real-valued radius r converts to an integer error budget
// t = floor(r*n + 1e-9); "within radius" means at most t disagreements.
int error_budget(double r, std::uint32_t n);

// A violation of (r, L) list-decodability: a center with more than L
// codewords within the error budget.
struct DecodingWitness {
  std::vector<std::uint32_t> center;  // length n
  std::vector<Codeword> offenders;    // L+1 distinct codewords, all within budget
};

// A violation of (r, l, L) list-recoverability: per-coordinate candidate
// lists of size <= l such that more than L codewords each disagree with
// their lists in at most t coordinates.
struct RecoveryWitness {
  std::vector<std::vector<std::uint32_t>> lists;  // n sorted lists, each size <= l
  std::vector<Codeword> offenders;                // L+1 distinct codewords
};

// Exact search over (L+1)-subsets of codewords, solving the center problem
// per subset over the reduced per-coordinate alphabet (only symbols the
// offenders take are candidates; all others are weakly dominated). Subsets
// are scanned in lexicographic index order and the first hit wins, so the
// result is deterministic and independent of `jobs`.
std::optional<DecodingWitness> list_decoding_witness_search(const RSCode& code, double r, int L,
                                                            const SearchOptions& opts = {});

bool is_list_decodable(const RSCode& code, double r, int L, const SearchOptions& opts = {});

// Same subset scan; per subset a DFS with memoized failure states over
// coordinates decides whether per-coordinate lists of size <= l keep all
// L+1 offenders within budget. States are per-offender miss counts, so the
// state space is bounded by (t+2)^(L+1).
std::optional<RecoveryWitness> list_recovery_witness_search(const RSCode& code, double r, int l,
                                                            int L,
                                                            const SearchOptions& opts = {});

bool is_list_recoverable(const RSCode& code, double r, int l, int L,
                         const SearchOptions& opts = {});

// Independent oracle: enumerates every center y in GF(q)^n in lexicographic
// order and counts ball occupancy directly. Same verdict contract as
// list_decoding_witness_search; used to cross-check it.
std::optional<DecodingWitness> naive_center_enumeration(const RSCode& code, double r, int L,
                                                        const SearchOptions& opts = {});

// Witness self-checks (the type invariants).
bool validate_witness(const RSCode& code, const DecodingWitness& w, double r);
bool validate_witness(const RSCode& code, const RecoveryWitness& w, double r, int l);

// C(n, k) saturated at `cap + 1` (enough to detect cap excess).
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

}  // namespace rspunct::oracles
