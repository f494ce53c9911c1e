#include "rspunct/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rspunct/bounds.hpp"
#include "rspunct/certificates.hpp"
#include "rspunct/cli.hpp"
#include "rspunct/errors.hpp"
#include "rspunct/experiments.hpp"
#include "rspunct/json_io.hpp"
#include "rspunct/oracles.hpp"
#include "rspunct/rational.hpp"
#include "rspunct/rng.hpp"
#include "rspunct/rs_code.hpp"

namespace rspunct {
namespace {

namespace fs = std::filesystem;

struct CheckOutcome {
  bool pass = true;
  std::string detail;
};

CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// Visits every sorted n-subset of {0, ..., q-1}.
void for_each_point_set(std::uint32_t q, std::uint32_t n,
                        const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> pts(n);
  std::iota(pts.begin(), pts.end(), 0u);
  while (true) {
    visit(pts);
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && pts[i] == q - n + i) --i;
    if (i < 0) break;
    ++pts[i];
    for (std::uint32_t j = i + 1; j < n; ++j) pts[j] = pts[j - 1] + 1;
  }
}

// 1: the l = 2 radius curve matches its closed form on a dense rate grid,
// vanishes at R = 1/2, and approaches 1 as R -> 0; same for the l = 1 form.
CheckOutcome check_curve_closed_forms(const oracles::SearchOptions&) {
  for (int i = 1; i <= 1000; ++i) {
    const double R = 0.5 * i / 1000.0;
    const double want = 1.0 - 3.0 * R / (R + 1.0);
    const double got = bounds::paper_radius(R, 2);
    if (std::abs(got - want) >= 1e-12) {
      std::ostringstream msg;
      msg << "l=2 mismatch at R=" << R << ": got " << got << ", closed form " << want;
      return fail(msg.str());
    }
  }
  if (std::abs(bounds::paper_radius(0.5, 2)) >= 1e-12) return fail("l=2 curve nonzero at R=1/2");
  if (bounds::paper_radius(1e-9, 2) <= 1.0 - 1e-6) return fail("l=2 curve does not approach 1");
  for (int i = 1; i < 1000; ++i) {
    const double R = i / 1000.0;
    const double want = 1.0 - 2.0 * R / (R + 1.0);
    const double got = bounds::paper_radius(R, 1);
    if (std::abs(got - want) >= 1e-12) {
      std::ostringstream msg;
      msg << "l=1 mismatch at R=" << R << ": got " << got << ", closed form " << want;
      return fail(msg.str());
    }
  }
  return {};
}

// 2: johnson <= punctured-RS radius <= capacity strictly inside (0, 1/l).
CheckOutcome check_dominance(const oracles::SearchOptions&) {
  for (int l = 1; l <= 4; ++l) {
    const int steps = 2000;
    for (int i = 1; i < steps; ++i) {
      const double R = (static_cast<double>(i) / steps) / l;
      const double johnson = bounds::johnson_radius(R, l);
      const double mid = bounds::paper_radius(R, l);
      const double cap = bounds::capacity_radius(R);
      if (johnson > mid + 1e-12 || mid > cap + 1e-12) {
        std::ostringstream msg;
        msg << "ordering violated at l=" << l << " R=" << R << ": " << johnson << " / " << mid
            << " / " << cap;
        return fail(msg.str());
      }
    }
  }
  return {};
}

// 3: 1000 random feasible inputs; the planned assignment passes its own
// constraint re-check, reproduces theorem_radius, and clears the radius floor.
CheckOutcome check_planner_soundness(const oracles::SearchOptions&) {
  std::mt19937_64 rng(2026);
  for (int iter = 0; iter < 1000; ++iter) {
    const int l = 1 + static_cast<int>(bounded(rng, 3));
    const double R = (0.02 + 0.95 * uniform01(rng)) / l;
    const double eps = 0.02 + 0.28 * uniform01(rng);
    const double zeta = eps * (0.5 + 0.5 * uniform01(rng));
    std::optional<std::uint32_t> n;
    if (iter % 4 == 0) n = 50 + static_cast<std::uint32_t>(bounded(rng, 200));
    bounds::ParamPlan plan;
    try {
      plan = bounds::plan_parameters(l, R, eps, zeta, n);
    } catch (const InfeasibleError& e) {
      std::ostringstream msg;
      msg << "planner refused feasible input l=" << l << " R=" << R << " eps=" << eps << ": "
          << e.what();
      return fail(msg.str());
    }
    if (auto violated = plan.first_violated_constraint()) {
      std::ostringstream msg;
      msg << "plan violates its own constraint at l=" << l << " R=" << R << " eps=" << eps << ": "
          << *violated;
      return fail(msg.str());
    }
    const double replayed = bounds::theorem_radius(l, plan.L, plan.c, R);
    if (std::abs(plan.radius - replayed) >= 1e-12)
      return fail("planned radius disagrees with the radius formula");
    const double floor_radius = bounds::paper_radius(R, l) - eps;
    if (plan.radius < floor_radius - 1e-12) {
      std::ostringstream msg;
      msg << "radius floor missed at l=" << l << " R=" << R << " eps=" << eps << ": "
          << plan.radius << " < " << floor_radius;
      return fail(msg.str());
    }
    if (n) {
      if (!plan.q_min || *plan.q_min != bounds::field_size_bound(*n, plan.cprime))
        return fail("field-size bound missing or wrong when n is supplied");
      if (!plan.k || !plan.h || *plan.h != static_cast<std::int64_t>(*plan.k) - 1)
        return fail("derived k/h missing or inconsistent when n is supplied");
    }
  }
  return {};
}

// Shared grid for checks 4 and 5: every code with q in {2,3,5}, n <= 4,
// k <= 2, every sorted evaluation-point set, L in 1..4, r = i/n.
CheckOutcome sweep_small_codes(
    const oracles::SearchOptions& opts,
    const std::function<std::optional<std::string>(const RSCode&, double, int,
                                                   const oracles::SearchOptions&)>& compare) {
  std::optional<std::string> first_error;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (std::uint32_t n = 1; n <= std::min(4u, q); ++n) {
      for_each_point_set(q, n, [&](const std::vector<std::uint32_t>& pts) {
        if (first_error) return;
        for (std::uint32_t k = 1; k <= std::min(2u, n); ++k) {
          RSCode code(PrimeField(q), k, pts);
          for (int L = 1; L <= 4; ++L) {
            for (std::uint32_t i = 0; i <= n; ++i) {
              const double r = static_cast<double>(i) / n;
              if (auto err = compare(code, r, L, opts)) {
                std::ostringstream msg;
                msg << *err << " (q=" << q << " n=" << n << " k=" << k << " L=" << L
                    << " r=" << i << "/" << n << ")";
                first_error = msg.str();
                return;
              }
            }
          }
        }
      });
      if (first_error) break;
    }
    if (first_error) break;
  }
  if (first_error) return fail(*first_error);
  return {};
}

// 4: the subset-scan decoding oracle and the naive center enumeration agree
// on every code of the small grid, and produced witnesses validate.
CheckOutcome check_oracle_equivalence(const oracles::SearchOptions& opts) {
  return sweep_small_codes(
      opts,
      [](const RSCode& code, double r, int L,
         const oracles::SearchOptions& o) -> std::optional<std::string> {
        const auto fast = oracles::list_decoding_witness_search(code, r, L, o);
        const auto naive = oracles::naive_center_enumeration(code, r, L, o);
        if (fast.has_value() != naive.has_value()) return "oracle verdicts disagree";
        if (fast && !oracles::validate_witness(code, *fast, r)) return "subset-scan witness invalid";
        if (naive && !oracles::validate_witness(code, *naive, r)) return "naive witness invalid";
        if (fast && fast->offenders.size() != static_cast<size_t>(L) + 1)
          return "witness offender count wrong";
        return std::nullopt;
      });
}

// 5: the recovery oracle with singleton input lists reproduces the decoding
// verdict on the same grid.
CheckOutcome check_recovery_specializes(const oracles::SearchOptions& opts) {
  return sweep_small_codes(
      opts,
      [](const RSCode& code, double r, int L,
         const oracles::SearchOptions& o) -> std::optional<std::string> {
        const auto dec = oracles::list_decoding_witness_search(code, r, L, o);
        const auto rec = oracles::list_recovery_witness_search(code, r, 1, L, o);
        if (dec.has_value() != rec.has_value()) return "recovery verdict differs from decoding";
        if (rec && !oracles::validate_witness(code, *rec, r, 1)) return "recovery witness invalid";
        return std::nullopt;
      });
}

// 6: 1000 random certificates (some deliberately tampered) keep their exact
// verdict under translation by a random codeword.
CheckOutcome check_shift_invariance(const oracles::SearchOptions&) {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::uint32_t p = bounded(rng, 2) ? 5 : 7;
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(bounded(rng, 3));
    const RSCode parent = RSCode::full_length(p, k);
    const std::uint32_t span = std::min(p - k, 2u);
    const std::uint32_t n = k + static_cast<std::uint32_t>(bounded(rng, span + 1));
    const int l = 1 + static_cast<int>(bounded(rng, 2));
    const int L = 1 + static_cast<int>(bounded(rng, 3));
    const std::uint64_t total = parent.codeword_count();

    certs::Certificate cert;
    cert.a = sample_distinct_positions(p, n, rng);
    const auto indices = sample_distinct_positions(static_cast<std::uint32_t>(total),
                                                   static_cast<std::uint32_t>(L) + 1, rng);
    for (auto idx : indices) cert.gammas.push_back(parent.encode(message_for_index(idx - 1, k, p)));
    if (bounded(rng, 2) == 0) {
      std::vector<const Codeword*> ptrs;
      for (const auto& g : cert.gammas) ptrs.push_back(&g);
      cert.S = certs::canonical_matrix(parent.field(), cert.a, ptrs, l);
    } else {
      cert.S = certs::ListMatrix::zeros(l, static_cast<int>(n));
      for (std::uint32_t j = 0; j < n; ++j) {
        const auto symbols = sample_distinct_positions(p, l, rng);
        for (int i = 0; i < l; ++i) cert.S.at(i, static_cast<int>(j)) = symbols[i] - 1;
      }
    }
    cert.family = certs::derive_family(cert.a, cert.S, cert.gammas);
    if (iter % 5 == 4) {
      for (auto& set : cert.family.sets) {
        if (!set.empty()) {
          set.pop_back();
          break;
        }
      }
    }
    static const Rational kChoices[] = {Rational(1, 2), Rational(1, 1), Rational(3, 2),
                                        Rational(2, 1)};
    cert.c = kChoices[bounded(rng, 4)];
    cert.h = static_cast<std::int64_t>(k) - 1;

    const Codeword v = parent.encode(message_for_index(bounded(rng, total), k, p));
    const auto base = certs::check_certificate_detailed(cert, parent);
    const auto moved =
        certs::check_certificate_detailed(certs::shift_certificate(cert, v, parent), parent);
    if (base.valid != moved.valid || base.first_violated != moved.first_violated) {
      std::ostringstream msg;
      msg << "verdict changed under shift at iter " << iter << ": " << base.valid << "/"
          << base.first_violated << " vs " << moved.valid << "/" << moved.first_violated;
      return fail(msg.str());
    }
  }
  return {};
}

// 7: 1000 random puncturings of full-length codes have minimum distance
// exactly n - k + 1 by brute force.
CheckOutcome check_mds_preservation(const oracles::SearchOptions&) {
  std::mt19937_64 rng(999);
  static const std::uint32_t kPrimes[] = {2, 3, 5, 7, 11, 13};
  for (int iter = 0; iter < 1000; ++iter) {
    const std::uint32_t p = kPrimes[bounded(rng, 6)];
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(bounded(rng, std::min(3u, p)));
    const std::uint32_t n = k + static_cast<std::uint32_t>(bounded(rng, p - k + 1));
    const RSCode parent = RSCode::full_length(p, k);
    const auto a = sample_distinct_positions(p, n, rng);
    const auto sub = parent.punctured(a);
    const std::uint32_t d = sub.min_distance_bruteforce();
    if (d != n - k + 1) {
      std::ostringstream msg;
      msg << "distance " << d << " != " << (n - k + 1) << " at p=" << p << " k=" << k
          << " n=" << n;
      return fail(msg.str());
    }
  }
  return {};
}

// 8: a unique-decoding configuration (2t < d) never produces a failure in
// 500 trials, and a saturated configuration fails every one of 50 trials
// with a witness that revalidates against the punctured code.
CheckOutcome check_monte_carlo(const oracles::SearchOptions& opts) {
  expt::ExperimentConfig safe;
  safe.p = 13;
  safe.k = 2;
  safe.n = 6;
  safe.r = 1.0 / 3;
  safe.l = 1;
  safe.L = 1;
  safe.trials = 500;
  safe.seed = 20260815;
  const auto sres = expt::run_experiment(safe, opts);
  if (sres.aborted) return fail("unique-decoding run aborted: " + sres.abort_reason);
  if (sres.failures != 0 || sres.completed != 500) {
    std::ostringstream msg;
    msg << "unique-decoding run reported " << sres.failures << " failures";
    return fail(msg.str());
  }

  expt::ExperimentConfig dense;
  dense.p = 3;
  dense.k = 2;
  dense.n = 2;
  dense.r = 0.5;
  dense.l = 1;
  dense.L = 4;
  dense.trials = 50;
  dense.seed = 4;
  const auto dres = expt::run_experiment(dense, opts);
  if (dres.aborted) return fail("saturated run aborted: " + dres.abort_reason);
  if (dres.failures != 50) {
    std::ostringstream msg;
    msg << "saturated run reported " << dres.failures << "/50 failures";
    return fail(msg.str());
  }
  const RSCode parent = RSCode::full_length(dense.p, dense.k);
  for (const auto& trial : dres.trials) {
    if (!trial.dec_witness) return fail("saturated trial lacks a witness");
    const RSCode sub = parent.punctured(trial.a);
    if (!oracles::validate_witness(sub, *trial.dec_witness, dense.r))
      return fail("saturated trial witness does not revalidate");
  }
  return {};
}

// 9: the sample and curves commands write byte-identical files when run
// twice with the same arguments and seed.
CheckOutcome check_determinism(const oracles::SearchOptions&) {
  const fs::path dir = fs::temp_directory_path() / "rspunct-selftest";
  std::error_code ec;
  fs::remove_all(dir, ec);
  fs::create_directories(dir);
  const auto path = [&](const char* name) { return (dir / name).string(); };

  CheckOutcome outcome;
  try {
    for (int run = 1; run <= 2 && outcome.pass; ++run) {
      const std::string tag = std::to_string(run);
      std::ostringstream out, err;
      const std::vector<std::string> args = {"sample",
                                             "--p",
                                             "7",
                                             "--k",
                                             "1",
                                             "--n",
                                             "3",
                                             "--r",
                                             "1/3",
                                             "--trials",
                                             "25",
                                             "--seed",
                                             "42",
                                             "--csv",
                                             path(("trials" + tag + ".csv").c_str()),
                                             "--summary",
                                             path(("summary" + tag + ".json").c_str()),
                                             "--witnesses",
                                             path(("witnesses" + tag + ".json").c_str())};
      if (cli::run_cli(args, out, err) != 0) outcome = fail("sample command failed: " + err.str());
    }
    for (int run = 1; run <= 2 && outcome.pass; ++run) {
      std::ostringstream out, err;
      const std::vector<std::string> args = {
          "curves", "--l",   "2",     "--rmin", "0.05",  "--rmax", "0.45", "--steps",
          "40",     "--eps", "0.1",   "--out",  path(("curves" + std::to_string(run) + ".csv").c_str())};
      if (cli::run_cli(args, out, err) != 0) outcome = fail("curves command failed: " + err.str());
    }
    if (outcome.pass) {
      for (const char* stem : {"trials", "summary", "witnesses", "curves"}) {
        const std::string ext = std::string(stem) == "summary" || std::string(stem) == "witnesses"
                                    ? ".json"
                                    : ".csv";
        const auto first = io::read_file((dir / (std::string(stem) + "1" + ext)).string());
        const auto second = io::read_file((dir / (std::string(stem) + "2" + ext)).string());
        if (first != second) {
          outcome = fail(std::string("reruns of ") + stem + " output differ");
          break;
        }
        if (first.empty()) {
          outcome = fail(std::string(stem) + " output is empty");
          break;
        }
      }
    }
  } catch (...) {
    fs::remove_all(dir, ec);
    throw;
  }
  fs::remove_all(dir, ec);
  return outcome;
}

// 10: with L = 0 the overlap inequality is unsatisfiable, so certificates
// are rejected (condition 1) and the exhaustive count is zero.
CheckOutcome check_vacuous_list_size(const oracles::SearchOptions& opts) {
  const RSCode parent = RSCode::full_length(3, 1);
  certs::Certificate cert;
  cert.a = {1, 2};
  cert.gammas = {parent.encode({1})};
  cert.S = certs::ListMatrix::zeros(1, 2);
  cert.S.at(0, 0) = cert.gammas[0][0];
  cert.S.at(0, 1) = cert.gammas[0][1];
  cert.family = certs::derive_family(cert.a, cert.S, cert.gammas);
  cert.c = Rational(1, 1);
  cert.h = 0;
  const auto res = certs::check_certificate_detailed(cert, parent);
  if (res.valid || res.first_violated != 1) {
    std::ostringstream msg;
    msg << "L=0 certificate not rejected on condition 1 (valid=" << res.valid
        << ", first=" << res.first_violated << ")";
    return fail(msg.str());
  }
  const auto count = certs::count_bad_puncturings(parent, 2, 1, 0, Rational(1, 1), opts);
  if (count.bad_count != 0) {
    std::ostringstream msg;
    msg << "L=0 exhaustive count is " << count.bad_count << ", want 0";
    return fail(msg.str());
  }
  return {};
}

struct Check {
  const char* label;
  CheckOutcome (*fn)(const oracles::SearchOptions&);
};

}  // namespace

int run_selftest(std::ostream& out, const oracles::SearchOptions& opts) {
  static const Check kChecks[] = {
      {"closed-form radius curves reproduced on a dense rate grid", check_curve_closed_forms},
      {"johnson <= punctured-RS radius <= capacity across rates", check_dominance},
      {"planner output satisfies every constraint and the radius floor", check_planner_soundness},
      {"subset-scan decoding oracle agrees with naive center enumeration",
       check_oracle_equivalence},
      {"recovery oracle with singleton lists matches the decoding oracle",
       check_recovery_specializes},
      {"certificate verdicts are invariant under codeword shifts", check_shift_invariance},
      {"random puncturings of full-length codes stay MDS", check_mds_preservation},
      {"Monte Carlo runs match combinatorial ground truth", check_monte_carlo},
      {"sample and curves outputs are byte-identical across reruns", check_determinism},
      {"L = 0 certificates are rejected and counted as zero", check_vacuous_list_size},
  };

  int failures = 0;
  int index = 0;
  for (const auto& check : kChecks) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome;
    try {
      outcome = check.fn(opts);
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    out << (outcome.pass ? "[PASS]" : "[FAIL]") << " " << (index < 10 ? " " : "") << index << ". "
        << check.label << " (" << ms << " ms)";
    if (!outcome.pass) {
      ++failures;
      out << "\n       " << outcome.detail;
    }
    out << "\n";
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
      << "\n";
  return failures;
}

}  // namespace rspunct
