#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rspunct/field.hpp"

namespace rspunct {

// A message is a polynomial over GF(p) given by its coefficients, constant
// term first, length k. A codeword is its vector of evaluations.
using Message = std::vector<std::uint32_t>;
using Codeword = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

std::uint32_t hamming_distance(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y);

// Message with the given lexicographic index (coefficient 0 most
// significant), i.e. the index-th entry of the enumeration order used by
// RSCode::for_each_codeword. Requires index < q^k.
Message message_for_index(std::uint64_t index, std::uint32_t k, std::uint32_t q);

// Reed-Solomon code RS[alpha](n, k) over GF(p): evaluations of all
// polynomials of degree < k at the distinct points alpha_1..alpha_n.
class RSCode {
 public:
  // Evaluation points must be distinct, reduced mod p, with 1 <= k <= n <= p.
  RSCode(PrimeField field, std::uint32_t k, std::vector<std::uint32_t> alpha);

  // The [p, k] code evaluating at every field element in ascending order.
  static RSCode full_length(std::uint32_t p, std::uint32_t k);

  const PrimeField& field() const { return field_; }
  std::uint32_t dimension() const { return k_; }
  std::uint32_t length() const { return static_cast<std::uint32_t>(alpha_.size()); }
  const std::vector<std::uint32_t>& eval_points() const { return alpha_; }
  double rate() const { return static_cast<double>(k_) / length(); }

  // Number of codewords q^k, saturated to UINT64_MAX on overflow.
  std::uint64_t codeword_count() const;

  Codeword encode(const Message& msg) const;

  // Restriction to the 1-based coordinate positions in `positions`
  // (distinct, within [1, length()], at least k of them). Positions are
  // taken in the order given.
  RSCode punctured(const std::vector<std::uint32_t>& positions) const;

  // All codewords in lexicographic message order. Throws CapExceededError
  // if q^k > cap.
  std::vector<Codeword> codewords(std::uint64_t cap = kDefaultEnumerationCap) const;

  // Streaming form of codewords(); fn(index, message, codeword) is called in
  // lexicographic message order and may return false to stop early.
  void for_each_codeword(const std::function<bool(std::uint64_t, const Message&, const Codeword&)>& fn,
                         std::uint64_t cap = kDefaultEnumerationCap) const;

  // Minimum Hamming weight over all nonzero codewords, by full enumeration.
  std::uint32_t min_distance_bruteforce(std::uint64_t cap = kDefaultEnumerationCap) const;

  // Message whose encoding equals `word`, or nullopt if `word` is not a
  // codeword. Lagrange interpolation on the first k coordinates followed by
  // a check of the rest.
  std::optional<Message> interpolate(const Codeword& word) const;

 private:
  PrimeField field_;
  std::uint32_t k_;
  std::vector<std::uint32_t> alpha_;
};

}  // namespace rspunct
