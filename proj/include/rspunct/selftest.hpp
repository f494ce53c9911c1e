#pragma once

#include <iosfwd>

#include "rspunct/oracles.hpp"

namespace rspunct {

// Runs the embedded acceptance suite: closed-form curve reproduction,
// dominance ordering, planner soundness, cross-oracle equivalence,
// specialization of recovery to decoding, certificate shift invariance,
// punctured distance preservation, Monte Carlo sanity checks, byte-level
// output determinism, and L=0 vacuity. Prints one PASS/FAIL line per check
// and returns the number of failures.
int run_selftest(std::ostream& out, const oracles::SearchOptions& opts);

}  // namespace rspunct
