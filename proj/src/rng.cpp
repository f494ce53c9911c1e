#include "rspunct/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace rspunct {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;  // splitmix64 stream increment
  return splitmix64_mix(master + (index + 1) * kGamma);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bounded: bound must be >= 1");
  if (bound == 1) return 0;
  // Largest multiple of bound that fits in 64 bits; values at or above it
  // are rejected so every residue is equally likely.
  const std::uint64_t limit = (UINT64_MAX / bound) * bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

std::vector<std::uint32_t> sample_distinct_positions(std::uint32_t m, std::uint32_t n,
                                                     std::mt19937_64& rng) {
  if (n == 0 || n > m)
    throw std::invalid_argument("sample_distinct_positions: need 1 <= n <= m");
  std::vector<std::uint32_t> pool(m);
  std::iota(pool.begin(), pool.end(), 1u);
  std::vector<std::uint32_t> out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint64_t j = i + bounded(rng, m - i);
    std::swap(pool[i], pool[j]);
    out[i] = pool[i];
  }
  return out;
}

}  // namespace rspunct
