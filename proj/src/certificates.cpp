#include "rspunct/certificates.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include "rspunct/bounds.hpp"
#include "rspunct/errors.hpp"

namespace rspunct::certs {

void IndexFamily::normalize() {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

std::int64_t IndexFamily::overlap_excess() const {
  std::int64_t total = 0;
  std::set<std::pair<int, int>> all;
  for (const auto& s : sets) {
    const std::set<std::pair<int, int>> unique(s.begin(), s.end());
    total += static_cast<std::int64_t>(unique.size());
    all.insert(unique.begin(), unique.end());
  }
  return total - static_cast<std::int64_t>(all.size());
}

bool IndexFamily::column_unique() const {
  for (const auto& s : sets) {
    std::set<int> cols;
    for (const auto& [i, j] : s)
      if (!cols.insert(j).second) return false;
  }
  return true;
}

ListMatrix ListMatrix::zeros(int rows, int cols) {
  ListMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.data.assign(static_cast<size_t>(rows) * cols, 0);
  return m;
}

bool ListMatrix::column_distinct() const {
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i)
      for (int i2 = i + 1; i2 < rows; ++i2)
        if (at(i, j) == at(i2, j)) return false;
  }
  return true;
}

IndexFamily derive_family(const std::vector<std::uint32_t>& a, const ListMatrix& S,
                          const std::vector<Codeword>& gammas) {
  const auto n = static_cast<int>(a.size());
  if (S.cols != n) throw std::invalid_argument("derive_family: S column count != |a|");
  if (S.rows < 1) throw std::invalid_argument("derive_family: S must have at least one row");
  IndexFamily fam;
  fam.sets.resize(gammas.size());
  for (size_t k = 0; k < gammas.size(); ++k) {
    const auto& g = gammas[k];
    for (int j = 0; j < n; ++j) {
      if (a[j] < 1 || a[j] > g.size())
        throw std::invalid_argument("derive_family: position out of range of gamma");
      const std::uint32_t sym = g[a[j] - 1];
      for (int i = 0; i < S.rows; ++i)
        if (S.at(i, j) == sym) fam.sets[k].emplace_back(i, j);
    }
  }
  fam.normalize();
  return fam;
}

namespace {

void validate_structure(const Certificate& cert, const RSCode& parent) {
  const std::uint32_t m = parent.length();
  const std::uint32_t p = parent.field().order();
  const auto n = cert.a.size();
  if (n < 1) throw std::invalid_argument("certificate: empty puncturing tuple");
  std::set<std::uint32_t> seen;
  for (const auto pos : cert.a) {
    if (pos < 1 || pos > m) throw std::invalid_argument("certificate: position out of [1, m]");
    if (!seen.insert(pos).second) throw std::invalid_argument("certificate: repeated position");
  }
  if (cert.S.rows < 1 || cert.S.cols != static_cast<int>(n) ||
      cert.S.data.size() != static_cast<size_t>(cert.S.rows) * cert.S.cols)
    throw std::invalid_argument("certificate: list matrix dimensions inconsistent");
  for (const auto v : cert.S.data)
    if (v >= p) throw std::invalid_argument("certificate: list matrix symbol not reduced mod p");
  if (cert.gammas.empty()) throw std::invalid_argument("certificate: needs at least one codeword");
  for (const auto& g : cert.gammas) {
    if (g.size() != m) throw std::invalid_argument("certificate: codeword length != parent length");
    if (!parent.interpolate(g))
      throw std::invalid_argument("certificate: gamma is not a codeword of the parent");
  }
  for (size_t i = 0; i < cert.gammas.size(); ++i)
    for (size_t j = i + 1; j < cert.gammas.size(); ++j)
      if (cert.gammas[i] == cert.gammas[j])
        throw std::invalid_argument("certificate: duplicate gamma codewords");
  // The parent is MDS, so its distance defect is determined by (m, k).
  const std::int64_t defect = static_cast<std::int64_t>(parent.dimension()) - 1;
  if (cert.h != defect)
    throw std::invalid_argument("certificate: h = " + std::to_string(cert.h) +
                                " does not match the parent's distance defect " +
                                std::to_string(defect));
  if (cert.family.sets.size() != cert.gammas.size())
    throw std::invalid_argument("certificate: family size != number of codewords");
  for (const auto& s : cert.family.sets)
    for (const auto& [i, j] : s)
      if (i < 0 || i >= cert.S.rows || j < 0 || j >= cert.S.cols)
        throw std::invalid_argument("certificate: family index out of [l] x [n]");
}

}  // namespace

CheckResult check_certificate_detailed(const Certificate& cert, const RSCode& parent) {
  validate_structure(cert, parent);
  IndexFamily family = cert.family;
  family.normalize();

  // Condition 1: the overlap excess strictly exceeds c*h*L (exact rationals).
  const std::int64_t L = cert.L();
  if (!exceeds_scaled(family.overlap_excess(), cert.c, cert.h * L)) return {false, 1};
  // Condition 2: distinct entries within every column of S.
  if (!cert.S.column_distinct()) return {false, 2};
  // Condition 3: the family is exactly the agreement sets of (a, S, gammas).
  if (derive_family(cert.a, cert.S, cert.gammas) != family) return {false, 3};
  return {true, 0};
}

bool check_certificate(const Certificate& cert, const RSCode& parent) {
  return check_certificate_detailed(cert, parent).valid;
}

Certificate shift_certificate(const Certificate& cert, const Codeword& v, const RSCode& parent) {
  if (v.size() != parent.length())
    throw std::invalid_argument("shift_certificate: v has wrong length");
  if (!parent.interpolate(v))
    throw std::invalid_argument("shift_certificate: v is not a codeword of the parent");
  const auto& field = parent.field();
  Certificate out = cert;
  for (int j = 0; j < out.S.cols; ++j) {
    const std::uint32_t shift = v[cert.a[j] - 1];
    for (int i = 0; i < out.S.rows; ++i) out.S.at(i, j) = field.add(out.S.at(i, j), shift);
  }
  for (auto& g : out.gammas)
    for (size_t i = 0; i < g.size(); ++i) g[i] = field.add(g[i], v[i]);
  return out;
}

ListMatrix canonical_matrix(const PrimeField& field, const std::vector<std::uint32_t>& a,
                            const std::vector<const Codeword*>& gammas, int l) {
  const auto n = static_cast<int>(a.size());
  const std::uint32_t q = field.order();
  if (l < 1 || static_cast<std::uint32_t>(l) > q)
    throw std::invalid_argument("canonical_matrix: need 1 <= l <= q for column-distinct output");
  ListMatrix S = ListMatrix::zeros(l, n);
  std::vector<std::pair<int, std::uint32_t>> tally;  // (-count, symbol), sorted
  for (int j = 0; j < n; ++j) {
    tally.clear();
    std::vector<std::uint32_t> syms;
    for (const auto* g : gammas) syms.push_back((*g)[a[j] - 1]);
    std::sort(syms.begin(), syms.end());
    for (size_t i = 0; i < syms.size();) {
      size_t e = i;
      while (e < syms.size() && syms[e] == syms[i]) ++e;
      tally.emplace_back(-static_cast<int>(e - i), syms[i]);
      i = e;
    }
    std::sort(tally.begin(), tally.end());  // most frequent first, then smallest symbol
    int row = 0;
    for (const auto& [negc, s] : tally) {
      if (row == l) break;
      S.at(row++, j) = s;
    }
    // Pad with the smallest symbols not already placed in this column; these
    // are unobserved here (all observed symbols were placed), so padding
    // never changes any agreement set.
    std::uint32_t next = 0;
    while (row < l) {
      bool used = false;
      for (int i = 0; i < row; ++i)
        if (S.at(i, j) == next) used = true;
      if (!used) S.at(row++, j) = next;
      ++next;
    }
  }
  return S;
}

namespace {

// Overlap excess of the canonical matrix, computed directly: per column,
// each chosen observed symbol with multiplicity m contributes m-1.
std::int64_t canonical_overlap_excess(const std::vector<std::uint32_t>& a,
                                      const std::vector<const Codeword*>& gammas, int l) {
  const auto n = static_cast<int>(a.size());
  std::int64_t lhs = 0;
  std::vector<std::uint32_t> syms;
  std::vector<int> counts;
  for (int j = 0; j < n; ++j) {
    syms.clear();
    for (const auto* g : gammas) syms.push_back((*g)[a[j] - 1]);
    std::sort(syms.begin(), syms.end());
    counts.clear();
    for (size_t i = 0; i < syms.size();) {
      size_t e = i;
      while (e < syms.size() && syms[e] == syms[i]) ++e;
      counts.push_back(static_cast<int>(e - i));
      i = e;
    }
    // Top-l multiplicities (tie order is irrelevant for the sum).
    std::sort(counts.rbegin(), counts.rend());
    const int take = std::min<int>(l, static_cast<int>(counts.size()));
    for (int i = 0; i < take; ++i) lhs += counts[i] - 1;
  }
  return lhs;
}

std::uint64_t falling_factorial_capped(std::uint64_t m, std::uint32_t n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint64_t f = m - i;
    if (f != 0 && v > cap / f) return cap + 1;
    v *= f;
  }
  return v;
}

}  // namespace

CountResult count_bad_puncturings(const RSCode& parent, std::uint32_t n, int l, int L,
                                  const Rational& c, const oracles::SearchOptions& opts) {
  const std::uint32_t m = parent.length();
  if (n < 1 || n > m) throw std::invalid_argument("count_bad_puncturings: need 1 <= n <= m");
  if (l < 1) throw std::invalid_argument("count_bad_puncturings: l must be >= 1");
  if (L < 0) throw std::invalid_argument("count_bad_puncturings: L must be >= 0");

  CountResult result;
  result.tuples = falling_factorial_capped(m, n, opts.caps.tuples);
  if (result.tuples > opts.caps.tuples)
    throw CapExceededError("count_bad_puncturings: tuple count exceeds cap " +
                           std::to_string(opts.caps.tuples));

  const std::uint64_t total_cw = parent.codeword_count();
  if (total_cw > opts.caps.enumeration)
    throw CapExceededError("count_bad_puncturings: q^k exceeds enumeration cap " +
                           std::to_string(opts.caps.enumeration));
  if (oracles::binomial_capped(total_cw, static_cast<std::uint64_t>(L) + 1, opts.caps.subsets) >
      opts.caps.subsets)
    throw CapExceededError("count_bad_puncturings: C(q^k, L+1) exceeds subset cap " +
                           std::to_string(opts.caps.subsets));

  // h from the parent's measured minimum distance.
  const std::int64_t h =
      static_cast<std::int64_t>(m) - parent.min_distance_bruteforce(opts.caps.enumeration);

  // Theorem-side bound 2^((L+1)*l*n) q^(-alpha*h) m^n, reported only when
  // (c, R) sits inside the feasible constant region. The rate here is that
  // of the punctured codes, k/n.
  const double rate = static_cast<double>(parent.dimension()) / n;
  const double cd = c.to_double();
  try {
    const auto [lo, hi] = bounds::feasible_c_interval(rate, l);
    if (!(cd > lo + bounds::kStrictTol) || !(cd < hi - bounds::kStrictTol))
      throw InfeasibleError("c outside its feasible interval (" + std::to_string(lo) + ", " +
                            std::to_string(hi) + ")");
    if (L < 1) throw InfeasibleError("L must be >= 1 for the counting bound");
    const auto [cp_lo, cp_hi] = bounds::feasible_cprime_interval(cd, rate, l);
    const double cp = (cp_lo + cp_hi) / 2;
    const auto [lam_lo, lam_hi] = bounds::lambda_interval(cd, cp, rate, l);
    const double lambda1 = lam_lo + (lam_hi - lam_lo) / 3;
    const double alpha = bounds::alpha(l, cd, cp, rate, lambda1);
    const double q = parent.field().order();
    const double bound = std::exp2(static_cast<double>(L + 1) * l * n) *
                         std::pow(q, -alpha * static_cast<double>(h)) *
                         std::pow(static_cast<double>(m), static_cast<double>(n));
    result.theorem_bound = bound;
    result.regime_notes.push_back(
        "bound evaluated at cprime/lambda1 chosen as interval midpoint and third");
    result.regime_notes.push_back("bound is asymptotic in (n, q); desk-scale values indicative only");
  } catch (const InfeasibleError& e) {
    result.regime_notes.push_back(std::string("no bound: ") + e.what());
  }

  if (L == 0) return result;  // no family can satisfy the strict overlap inequality
  if (static_cast<std::uint32_t>(l) > parent.field().order()) {
    result.regime_notes.push_back("no column-distinct list matrix exists (l > q); count is 0");
    return result;
  }

  const auto cws = parent.codewords(opts.caps.enumeration);
  const int N = static_cast<int>(cws.size());
  const int L1 = L + 1;
  const std::int64_t threshold_factor = h * static_cast<std::int64_t>(L);

  // Is any (L+1)-subset of codewords an overlap witness for this tuple?
  const auto tuple_is_bad = [&](const std::vector<std::uint32_t>& a) -> bool {
    if (L1 > N) return false;
    std::vector<const Codeword*> members;
    members.reserve(L1);
    auto rec = [&](auto&& self, int start) -> bool {
      if (static_cast<int>(members.size()) == L1)
        return exceeds_scaled(canonical_overlap_excess(a, members, l), c, threshold_factor);
      for (int idx = start; idx < N; ++idx) {
        members.push_back(&cws[idx]);
        if (self(self, idx + 1)) return true;
        members.pop_back();
      }
      return false;
    };
    return rec(rec, 0);
  };

  // Enumerate ordered distinct tuples, striped across workers by the first
  // entry; per-stripe counts are summed, so the total is order-independent.
  const auto count_stripe = [&](std::uint32_t first_lo, std::uint32_t stride) {
    std::uint64_t bad = 0;
    std::vector<std::uint32_t> a(n);
    std::vector<bool> used(m + 1, false);
    auto rec = [&](auto&& self, std::uint32_t depth) -> void {
      if (depth == n) {
        if (tuple_is_bad(a)) ++bad;
        return;
      }
      for (std::uint32_t pos = 1; pos <= m; ++pos) {
        if (used[pos]) continue;
        used[pos] = true;
        a[depth] = pos;
        self(self, depth + 1);
        used[pos] = false;
      }
    };
    for (std::uint32_t first = first_lo; first <= m; first += stride) {
      used[first] = true;
      a[0] = first;
      if (n == 1) {
        if (tuple_is_bad(a)) ++bad;
      } else {
        rec(rec, 1);
      }
      used[first] = false;
    }
    return bad;
  };

  const int workers = std::max(1, std::min<int>(opts.jobs, static_cast<int>(m)));
  if (workers == 1) {
    result.bad_count = count_stripe(1, 1);
    return result;
  }
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        partial[w] = count_stripe(static_cast<std::uint32_t>(w + 1),
                                  static_cast<std::uint32_t>(workers));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  for (const auto v : partial) result.bad_count += v;
  return result;
}

}  // namespace rspunct::certs
