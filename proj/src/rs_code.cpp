#include "rspunct/rs_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "rspunct/errors.hpp"

namespace rspunct {

std::uint32_t hamming_distance(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
  if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::uint32_t d = 0;
  for (size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

Message message_for_index(std::uint64_t index, std::uint32_t k, std::uint32_t q) {
  Message msg(k);
  for (std::uint32_t i = k; i-- > 0;) {
    msg[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  if (index != 0) throw std::invalid_argument("message_for_index: index >= q^k");
  return msg;
}

RSCode::RSCode(PrimeField field, std::uint32_t k, std::vector<std::uint32_t> alpha)
    : field_(field), k_(k), alpha_(std::move(alpha)) {
  const auto n = static_cast<std::uint32_t>(alpha_.size());
  if (k_ < 1 || k_ > n)
    throw std::invalid_argument("RSCode: need 1 <= k <= n, got k=" + std::to_string(k_) +
                                " n=" + std::to_string(n));
  if (n > field_.order()) throw std::invalid_argument("RSCode: more evaluation points than field elements");
  std::unordered_set<std::uint32_t> seen;
  for (const auto a : alpha_) {
    if (a >= field_.order())
      throw std::invalid_argument("RSCode: evaluation point " + std::to_string(a) +
                                  " not reduced mod " + std::to_string(field_.order()));
    if (!seen.insert(a).second)
      throw std::invalid_argument("RSCode: duplicate evaluation point " + std::to_string(a));
  }
}

RSCode RSCode::full_length(std::uint32_t p, std::uint32_t k) {
  PrimeField field(p);
  return RSCode(field, k, field.elements());
}

std::uint64_t RSCode::codeword_count() const {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (count > UINT64_MAX / field_.order()) return UINT64_MAX;
    count *= field_.order();
  }
  return count;
}

Codeword RSCode::encode(const Message& msg) const {
  if (msg.size() != k_)
    throw std::invalid_argument("RSCode::encode: message length " + std::to_string(msg.size()) +
                                " != k=" + std::to_string(k_));
  const std::uint64_t p = field_.order();
  Codeword out(alpha_.size());
  for (size_t j = 0; j < alpha_.size(); ++j) {
    // Horner evaluation, highest coefficient first.
    std::uint64_t acc = 0;
    for (std::uint32_t i = k_; i-- > 0;) {
      if (msg[i] >= p)
        throw std::invalid_argument("RSCode::encode: coefficient not reduced mod " +
                                    std::to_string(p));
      acc = (acc * alpha_[j] + msg[i]) % p;
    }
    out[j] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

RSCode RSCode::punctured(const std::vector<std::uint32_t>& positions) const {
  const auto m = length();
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> pts;
  pts.reserve(positions.size());
  for (const auto pos : positions) {
    if (pos < 1 || pos > m)
      throw std::invalid_argument("RSCode::punctured: position " + std::to_string(pos) +
                                  " outside [1, " + std::to_string(m) + "]");
    if (!seen.insert(pos).second)
      throw std::invalid_argument("RSCode::punctured: duplicate position " + std::to_string(pos));
    pts.push_back(alpha_[pos - 1]);
  }
  if (pts.size() < k_)
    throw std::invalid_argument("RSCode::punctured: fewer than k positions kept");
  return RSCode(field_, k_, std::move(pts));
}

void RSCode::for_each_codeword(
    const std::function<bool(std::uint64_t, const Message&, const Codeword&)>& fn,
    std::uint64_t cap) const {
  const std::uint64_t total = codeword_count();
  if (total > cap)
    throw CapExceededError("codeword enumeration: q^k = " +
                           (total == UINT64_MAX ? std::string("overflow") : std::to_string(total)) +
                           " exceeds cap " + std::to_string(cap));
  Message msg(k_, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    if (!fn(index, msg, encode(msg))) return;
    // Odometer increment: last coefficient varies fastest, so messages come
    // out in lexicographic order with coefficient 0 most significant.
    for (std::uint32_t i = k_; i-- > 0;) {
      if (++msg[i] < field_.order()) break;
      msg[i] = 0;
    }
  }
}

std::vector<Codeword> RSCode::codewords(std::uint64_t cap) const {
  std::vector<Codeword> out;
  out.reserve(static_cast<size_t>(codeword_count() > cap ? 0 : codeword_count()));
  for_each_codeword(
      [&](std::uint64_t, const Message&, const Codeword& cw) {
        out.push_back(cw);
        return true;
      },
      cap);
  return out;
}

std::uint32_t RSCode::min_distance_bruteforce(std::uint64_t cap) const {
  // Linear code: minimum distance = minimum weight of a nonzero codeword.
  std::uint32_t best = length();
  for_each_codeword(
      [&](std::uint64_t index, const Message&, const Codeword& cw) {
        if (index == 0) return true;  // zero codeword
        std::uint32_t w = 0;
        for (const auto v : cw) w += v != 0;
        best = std::min(best, w);
        return best > 1;  // weight 1 cannot be beaten
      },
      cap);
  return best;
}

std::optional<Message> RSCode::interpolate(const Codeword& word) const {
  if (word.size() != alpha_.size())
    throw std::invalid_argument("RSCode::interpolate: word length != n");
  const std::uint32_t p = field_.order();
  for (const auto v : word) {
    if (v >= p)
      throw std::invalid_argument("RSCode::interpolate: symbol not reduced mod " + std::to_string(p));
  }
  // Newton interpolation through the first k points.
  std::vector<std::uint32_t> divided(word.begin(), word.begin() + k_);
  for (std::uint32_t level = 1; level < k_; ++level) {
    for (std::uint32_t i = k_ - 1; i >= level; --i) {
      const std::uint32_t num = field_.sub(divided[i], divided[i - 1]);
      const std::uint32_t den = field_.sub(alpha_[i], alpha_[i - level]);
      divided[i] = field_.mul(num, field_.inv(den));
    }
  }
  // Expand the Newton form into monomial coefficients.
  Message coeffs(k_, 0);
  for (std::uint32_t i = k_; i-- > 0;) {
    // coeffs = coeffs * (x - alpha_i) + divided[i]
    for (std::uint32_t j = k_ - 1; j >= 1; --j)
      coeffs[j] = field_.sub(j > 0 ? coeffs[j - 1] : 0u, field_.mul(coeffs[j], alpha_[i]));
    coeffs[0] = field_.add(divided[i], field_.neg(field_.mul(coeffs[0], alpha_[i])));
  }
  return encode(coeffs) == word ? std::optional<Message>(coeffs) : std::nullopt;
}

}  // namespace rspunct
