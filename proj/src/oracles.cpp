#include "rspunct/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "rspunct/errors.hpp"

namespace rspunct::oracles {

int error_budget(double r, std::uint32_t n) {
  if (r < 0) throw std::invalid_argument("error_budget: radius must be >= 0");
  return static_cast<int>(std::floor(r * n + 1e-9));
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;  // exact: i consecutive integers are divisible by i!
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

std::uint64_t pow_capped(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

constexpr int kMaxOffenders = 64;  // cover masks are uint64_t bitsets

// One admissible per-coordinate choice: a sorted symbol list plus the set of
// offenders whose symbol at this coordinate lies in the list.
struct Candidate {
  std::vector<std::uint32_t> symbols;
  std::uint64_t cover = 0;
};

// Exact feasibility solver for one (L+1)-subset of codewords: depth-first
// search over coordinates choosing one candidate each, tracking per-offender
// miss counts, with memoization of (coordinate, counts) states that cannot
// be completed. Candidates are tried in lexicographic symbol order, so the
// first solution found is lexicographically minimal for this subset.
class SubsetSolver {
 public:
  SubsetSolver(std::uint32_t n, int t, int L1) : n_(n), t_(t), L1_(L1), counts_(L1, 0) {}

  std::optional<std::vector<int>> solve(const std::vector<std::vector<Candidate>>& coords) {
    coords_ = &coords;
    // Quick necessary condition: even the best-covering candidate per
    // coordinate must keep total misses within the summed budget.
    std::uint64_t min_misses = 0;
    for (const auto& cands : coords) {
      int best = 0;
      for (const auto& c : cands) best = std::max(best, std::popcount(c.cover));
      min_misses += static_cast<std::uint64_t>(L1_ - best);
    }
    if (min_misses > static_cast<std::uint64_t>(L1_) * static_cast<std::uint64_t>(t_))
      return std::nullopt;

    std::fill(counts_.begin(), counts_.end(), 0);
    failed_.clear();
    choice_.assign(n_, -1);
    if (!dfs(0)) return std::nullopt;
    return choice_;
  }

 private:
  std::uint64_t encode(std::uint32_t j) const {
    std::uint64_t s = 0;
    for (const int c : counts_) s = s * (t_ + 1) + static_cast<std::uint64_t>(c);
    return s * (n_ + 1) + j;
  }

  bool dfs(std::uint32_t j) {
    if (j == n_) return true;
    const std::uint64_t key = encode(j);
    if (failed_.contains(key)) return false;
    int touched[kMaxOffenders];
    for (size_t ci = 0; ci < (*coords_)[j].size(); ++ci) {
      const Candidate& cand = (*coords_)[j][ci];
      int ntouched = 0;
      bool dead = false;
      for (int k = 0; k < L1_; ++k) {
        if ((cand.cover >> k) & 1) continue;
        if (counts_[k] == t_) {
          dead = true;
          break;
        }
        ++counts_[k];
        touched[ntouched++] = k;
      }
      if (!dead) {
        choice_[j] = static_cast<int>(ci);
        if (dfs(j + 1)) return true;
      }
      for (int i = 0; i < ntouched; ++i) --counts_[touched[i]];
    }
    failed_.insert(key);
    return false;
  }

  std::uint32_t n_;
  int t_;
  int L1_;
  std::vector<int> counts_;
  std::vector<int> choice_;
  std::unordered_set<std::uint64_t> failed_;
  const std::vector<std::vector<Candidate>>* coords_ = nullptr;
};

// Candidate construction for list-decoding: one candidate per distinct
// offender symbol (ascending).
std::vector<std::vector<Candidate>> decoding_candidates(const std::vector<const Codeword*>& off,
                                                        std::uint32_t n) {
  std::vector<std::vector<Candidate>> coords(n);
  const int L1 = static_cast<int>(off.size());
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<std::uint32_t> syms;
    for (const auto* cw : off) syms.push_back((*cw)[j]);
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    for (const auto s : syms) {
      Candidate c;
      c.symbols = {s};
      for (int k = 0; k < L1; ++k)
        if ((*off[k])[j] == s) c.cover |= std::uint64_t{1} << k;
      coords[j].push_back(std::move(c));
    }
  }
  return coords;
}

// Candidate construction for list-recovery: when the offenders take at most
// l distinct symbols at a coordinate, the full symbol set is the unique
// maximal (dominating) list; otherwise every l-subset of the distinct
// symbols, in lexicographic order.
std::vector<std::vector<Candidate>> recovery_candidates(const std::vector<const Codeword*>& off,
                                                        std::uint32_t n, int l) {
  std::vector<std::vector<Candidate>> coords(n);
  const int L1 = static_cast<int>(off.size());
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<std::uint32_t> syms;
    for (const auto* cw : off) syms.push_back((*cw)[j]);
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    const int d = static_cast<int>(syms.size());
    const auto cover_of = [&](const std::vector<std::uint32_t>& list) {
      std::uint64_t cover = 0;
      for (int k = 0; k < L1; ++k)
        if (std::binary_search(list.begin(), list.end(), (*off[k])[j]))
          cover |= std::uint64_t{1} << k;
      return cover;
    };
    if (d <= l) {
      Candidate c;
      c.symbols = syms;
      c.cover = cover_of(syms);
      coords[j].push_back(std::move(c));
      continue;
    }
    // All l-subsets of syms, lexicographic.
    std::vector<int> idx(l);
    for (int i = 0; i < l; ++i) idx[i] = i;
    while (true) {
      Candidate c;
      c.symbols.reserve(l);
      for (const int i : idx) c.symbols.push_back(syms[i]);
      c.cover = cover_of(c.symbols);
      coords[j].push_back(std::move(c));
      int i = l - 1;
      while (i >= 0 && idx[i] == d - l + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int p = i + 1; p < l; ++p) idx[p] = idx[p - 1] + 1;
    }
  }
  return coords;
}

// Generic scan over (L+1)-subsets of codewords in lexicographic index
// order. try_subset returns a payload when the subset yields a witness; the
// scan returns the payload of the first such subset. When `pair_prune` is
// set, any two subset members must be within `max_pair_dist` of each other
// (valid for list-decoding and l=1 recovery by the triangle inequality).
// Parallel mode stripes the first subset element across workers and keeps
// the witness with the smallest first element, which is exactly the
// sequential answer.
template <typename Payload, typename TrySubset>
std::optional<Payload> scan_subsets(const std::vector<Codeword>& cws, int L1, bool pair_prune,
                                    int max_pair_dist, const TrySubset& try_subset, int jobs) {
  const int N = static_cast<int>(cws.size());
  if (L1 > N) return std::nullopt;

  const auto run_from = [&](int first, std::optional<Payload>& out) {
    std::vector<int> chosen{first};
    std::vector<const Codeword*> members{&cws[first]};
    auto rec = [&](auto&& self, int start) -> bool {
      if (static_cast<int>(chosen.size()) == L1) {
        if (auto payload = try_subset(members, chosen)) {
          out = std::move(payload);
          return true;
        }
        return false;
      }
      for (int idx = start; idx < N; ++idx) {
        if (pair_prune) {
          bool ok = true;
          for (const int c : chosen) {
            if (hamming_distance(cws[idx], cws[c]) > static_cast<std::uint32_t>(max_pair_dist)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
        }
        chosen.push_back(idx);
        members.push_back(&cws[idx]);
        if (self(self, idx + 1)) return true;
        chosen.pop_back();
        members.pop_back();
      }
      return false;
    };
    return rec(rec, first + 1);
  };

  const int workers = std::min(jobs, N);
  if (workers <= 1) {
    std::optional<Payload> out;
    for (int first = 0; first + L1 <= N; ++first) {
      if (run_from(first, out)) return out;
    }
    return std::nullopt;
  }

  std::atomic<int> best_first{N};
  std::vector<std::optional<Payload>> slots(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int first = w; first + L1 <= N; first += workers) {
          if (first > best_first.load(std::memory_order_relaxed)) break;
          std::optional<Payload> out;
          if (run_from(first, out)) {
            slots[w] = std::move(out);
            int cur = best_first.load(std::memory_order_relaxed);
            while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
            }
            break;  // later firsts in this stripe are lexicographically larger
          }
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  const int winner = best_first.load();
  if (winner >= N) return std::nullopt;
  return slots[winner % workers];
}

void check_common_preconditions(const RSCode& code, double r, int L, const SearchCaps& caps) {
  if (L < 1) throw std::invalid_argument("witness search: L must be >= 1");
  if (r < 0) throw std::invalid_argument("witness search: radius must be >= 0");
  if (L + 1 > kMaxOffenders)
    throw std::invalid_argument("witness search: L+1 must be <= " + std::to_string(kMaxOffenders));
  const std::uint64_t total = code.codeword_count();
  if (total > caps.enumeration)
    throw CapExceededError("witness search: q^k = " + std::to_string(total) +
                           " exceeds enumeration cap " + std::to_string(caps.enumeration));
  const std::uint64_t subsets = binomial_capped(total, static_cast<std::uint64_t>(L) + 1, caps.subsets);
  if (subsets > caps.subsets)
    throw CapExceededError("witness search: C(q^k, L+1) exceeds subset cap " +
                           std::to_string(caps.subsets));
}

void check_state_cap(int t, int L, const SearchCaps& caps) {
  if (pow_capped(static_cast<std::uint64_t>(t) + 2, static_cast<std::uint32_t>(L) + 1,
                 caps.states) > caps.states)
    throw CapExceededError("witness search: (t+2)^(L+1) exceeds state cap " +
                           std::to_string(caps.states));
}

}  // namespace

std::optional<DecodingWitness> list_decoding_witness_search(const RSCode& code, double r, int L,
                                                            const SearchOptions& opts) {
  check_common_preconditions(code, r, L, opts.caps);
  const std::uint32_t n = code.length();
  const int t = error_budget(r, n);
  check_state_cap(t, L, opts.caps);
  const auto cws = code.codewords(opts.caps.enumeration);

  const auto try_subset = [&](const std::vector<const Codeword*>& members,
                              const std::vector<int>&) -> std::optional<DecodingWitness> {
    const auto coords = decoding_candidates(members, n);
    SubsetSolver solver(n, t, L + 1);
    const auto choice = solver.solve(coords);
    if (!choice) return std::nullopt;
    DecodingWitness w;
    w.center.resize(n);
    for (std::uint32_t j = 0; j < n; ++j) w.center[j] = coords[j][(*choice)[j]].symbols[0];
    for (const auto* cw : members) w.offenders.push_back(*cw);
    return w;
  };
  return scan_subsets<DecodingWitness>(cws, L + 1, /*pair_prune=*/true, 2 * t, try_subset,
                                       opts.jobs);
}

bool is_list_decodable(const RSCode& code, double r, int L, const SearchOptions& opts) {
  return !list_decoding_witness_search(code, r, L, opts).has_value();
}

std::optional<RecoveryWitness> list_recovery_witness_search(const RSCode& code, double r, int l,
                                                            int L, const SearchOptions& opts) {
  if (l < 1) throw std::invalid_argument("witness search: l must be >= 1");
  check_common_preconditions(code, r, L, opts.caps);
  const std::uint32_t n = code.length();
  const int t = error_budget(r, n);
  check_state_cap(t, L, opts.caps);
  const auto cws = code.codewords(opts.caps.enumeration);

  const auto try_subset = [&](const std::vector<const Codeword*>& members,
                              const std::vector<int>&) -> std::optional<RecoveryWitness> {
    const auto coords = recovery_candidates(members, n, l);
    SubsetSolver solver(n, t, L + 1);
    const auto choice = solver.solve(coords);
    if (!choice) return std::nullopt;
    RecoveryWitness w;
    w.lists.resize(n);
    for (std::uint32_t j = 0; j < n; ++j) w.lists[j] = coords[j][(*choice)[j]].symbols;
    for (const auto* cw : members) w.offenders.push_back(*cw);
    return w;
  };
  // The pairwise triangle-inequality prune is only valid when lists are
  // singletons (l = 1); with larger lists two offenders may both match a
  // shared list without being close to each other.
  const bool pair_prune = l == 1;
  return scan_subsets<RecoveryWitness>(cws, L + 1, pair_prune, 2 * t, try_subset, opts.jobs);
}

bool is_list_recoverable(const RSCode& code, double r, int l, int L, const SearchOptions& opts) {
  return !list_recovery_witness_search(code, r, l, L, opts).has_value();
}

std::optional<DecodingWitness> naive_center_enumeration(const RSCode& code, double r, int L,
                                                        const SearchOptions& opts) {
  if (L < 1) throw std::invalid_argument("naive_center_enumeration: L must be >= 1");
  if (r < 0) throw std::invalid_argument("naive_center_enumeration: radius must be >= 0");
  const std::uint32_t n = code.length();
  const std::uint32_t q = code.field().order();
  const std::uint64_t centers = pow_capped(q, n, opts.caps.centers);
  if (centers > opts.caps.centers)
    throw CapExceededError("naive_center_enumeration: q^n exceeds center cap " +
                           std::to_string(opts.caps.centers));
  // q^k <= q^n, so the center cap also bounds codeword enumeration here.
  const auto cws = code.codewords(opts.caps.centers);
  const int t = error_budget(r, n);

  std::vector<std::uint32_t> y(n, 0);
  for (std::uint64_t step = 0; step < centers; ++step) {
    int inside = 0;
    std::vector<Codeword> offenders;
    for (const auto& cw : cws) {
      if (hamming_distance(cw, y) <= static_cast<std::uint32_t>(t)) {
        ++inside;
        if (inside <= L + 1) offenders.push_back(cw);
        if (inside > L) {
          DecodingWitness w;
          w.center = y;
          w.offenders = std::move(offenders);
          return w;
        }
      }
    }
    // Lexicographic increment: last coordinate varies fastest.
    for (std::uint32_t j = n; j-- > 0;) {
      if (++y[j] < q) break;
      y[j] = 0;
    }
  }
  return std::nullopt;
}

bool validate_witness(const RSCode& code, const DecodingWitness& w, double r) {
  const std::uint32_t n = code.length();
  if (w.center.size() != n) return false;
  for (const auto s : w.center)
    if (s >= code.field().order()) return false;
  const int t = error_budget(r, n);
  for (size_t i = 0; i < w.offenders.size(); ++i) {
    if (!code.interpolate(w.offenders[i])) return false;
    if (hamming_distance(w.offenders[i], w.center) > static_cast<std::uint32_t>(t)) return false;
    for (size_t j = i + 1; j < w.offenders.size(); ++j)
      if (w.offenders[i] == w.offenders[j]) return false;
  }
  return !w.offenders.empty();
}

bool validate_witness(const RSCode& code, const RecoveryWitness& w, double r, int l) {
  const std::uint32_t n = code.length();
  if (w.lists.size() != n) return false;
  for (const auto& list : w.lists) {
    if (list.empty() || list.size() > static_cast<size_t>(l)) return false;
    for (size_t i = 0; i < list.size(); ++i) {
      if (list[i] >= code.field().order()) return false;
      if (i > 0 && list[i] <= list[i - 1]) return false;  // sorted, distinct
    }
  }
  const int t = error_budget(r, n);
  for (size_t i = 0; i < w.offenders.size(); ++i) {
    if (!code.interpolate(w.offenders[i])) return false;
    int misses = 0;
    for (std::uint32_t j = 0; j < n; ++j)
      if (!std::binary_search(w.lists[j].begin(), w.lists[j].end(), w.offenders[i][j])) ++misses;
    if (misses > t) return false;
    for (size_t j = i + 1; j < w.offenders.size(); ++j)
      if (w.offenders[i] == w.offenders[j]) return false;
  }
  return !w.offenders.empty();
}

}  // namespace rspunct::oracles
