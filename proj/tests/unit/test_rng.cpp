#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rspunct/rng.hpp"

using nlohmann::json;

namespace {

json load_vectors() {
  std::ifstream in(std::string(RSPUNCT_TEST_DATA_DIR) + "/rng_vectors.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("generator output matches the pinned reference sequences") {
  CHECK(std::string(rspunct::kRngAlgorithm) == "mt19937_64");
  const json vectors = load_vectors();
  for (const auto& entry : vectors.at("mt19937_64")) {
    std::mt19937_64 rng(entry.at("seed").get<std::uint64_t>());
    std::uint64_t produced = 0;
    for (const auto& want : entry.at("first")) {
      CHECK(rng() == want.get<std::uint64_t>());
      ++produced;
    }
    if (entry.contains("index10000")) {
      while (produced < 9999) {
        rng();
        ++produced;
      }
      CHECK(rng() == entry.at("index10000").get<std::uint64_t>());
    }
  }
}

TEST_CASE("substream seeds match the pinned derivation") {
  const json vectors = load_vectors();
  for (const auto& entry : vectors.at("substreams")) {
    const auto master = entry.at("master").get<std::uint64_t>();
    std::uint64_t index = 0;
    for (const auto& want : entry.at("seeds")) {
      CHECK(rspunct::substream_seed(master, index) == want.get<std::uint64_t>());
      ++index;
    }
  }
  // Substream seeds from nearby masters and indices do not collide.
  std::set<std::uint64_t> seen;
  for (std::uint64_t master = 0; master < 32; ++master)
    for (std::uint64_t i = 0; i < 32; ++i) seen.insert(rspunct::substream_seed(master, i));
  CHECK(seen.size() == 32 * 32);
}

TEST_CASE("bounded draws stay in range and hit every value") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) CHECK(rspunct::bounded(rng, 1) == 0);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto v = rspunct::bounded(rng, 7);
    CHECK(v < 7);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("bounded draws are uniform by chi-square at 120 cells") {
  std::mt19937_64 rng(5489);
  const int cells = 120;
  const int draws = 100000;
  std::vector<int> count(cells, 0);
  for (int i = 0; i < draws; ++i) ++count[rspunct::bounded(rng, cells)];
  const double expected = static_cast<double>(draws) / cells;
  double chi2 = 0;
  for (int c = 0; c < cells; ++c) {
    const double d = count[c] - expected;
    chi2 += d * d / expected;
  }
  // 99.9% critical value of chi-square with 119 degrees of freedom.
  CHECK(chi2 < 172.41768160217916);
}

TEST_CASE("position samples are ordered tuples of distinct values in range") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rspunct::bounded(rng, 20));
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rspunct::bounded(rng, m));
    const auto sample = rspunct::sample_distinct_positions(m, n, rng);
    REQUIRE(sample.size() == n);
    std::set<std::uint32_t> distinct(sample.begin(), sample.end());
    CHECK(distinct.size() == n);
    for (auto v : sample) {
      CHECK(v >= 1);
      CHECK(v <= m);
    }
  }
  // The full permutation case covers all of {1..m}.
  const auto full = rspunct::sample_distinct_positions(6, 6, rng);
  std::set<std::uint32_t> elems(full.begin(), full.end());
  CHECK(elems == std::set<std::uint32_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("position samples cover all ordered pairs roughly uniformly") {
  std::mt19937_64 rng(123456789);
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> freq;
  const int draws = 6000;
  for (int i = 0; i < draws; ++i) {
    const auto s = rspunct::sample_distinct_positions(3, 2, rng);
    ++freq[{s[0], s[1]}];
  }
  REQUIRE(freq.size() == 6);  // all 3*2 ordered pairs occur
  for (const auto& [pair, count] : freq) {
    CHECK(count > 800);
    CHECK(count < 1200);
  }
}

TEST_CASE("identical seeds reproduce identical streams") {
  std::mt19937_64 a(97), b(97);
  for (int i = 0; i < 1000; ++i) CHECK(rspunct::bounded(a, 1000) == rspunct::bounded(b, 1000));
  const auto s1 = rspunct::sample_distinct_positions(50, 10, a);
  const auto s2 = rspunct::sample_distinct_positions(50, 10, b);
  CHECK(s1 == s2);
}
