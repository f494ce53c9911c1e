#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rspunct {

// All randomized code in this library draws from std::mt19937_64, whose
// output sequence is pinned by the C++ standard, so results reproduce
// bit-for-bit across platforms and compilers for a given seed. Output files
// record this tag next to the seed.
inline constexpr const char* kRngAlgorithm = "mt19937_64";

// Finalizer of the splitmix64 generator (Vigna). Used to derive independent
// per-trial seeds from one master seed.
std::uint64_t splitmix64_mix(std::uint64_t z);

// Seed for substream `index` (0-based) of a master seed: the (index+1)-th
// output of a splitmix64 stream started at `master`.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

// Uniform draw from [0, bound) by rejection sampling; free of modulo bias.
// bound must be >= 1.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound);

// Ordered sample of n distinct positions from {1, ..., m} (a partial
// Fisher-Yates shuffle). Requires 1 <= n <= m.
std::vector<std::uint32_t> sample_distinct_positions(std::uint32_t m, std::uint32_t n,
                                                     std::mt19937_64& rng);

}  // namespace rspunct
