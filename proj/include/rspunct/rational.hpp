#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rspunct {

// Exact rational with 64-bit numerator/denominator, kept normalized
// (den > 0, gcd(|num|, den) == 1). Used wherever a threshold comparison
// must not suffer floating-point error.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);  // throws std::invalid_argument on d == 0

  // Exact value of a binary64 double (every finite double is rational).
  // Throws std::invalid_argument if it does not fit in int64/int64.
  static Rational from_double(double x);

  // Accepts "3/4", "-2/5", "0.25", "7". Returns nullopt on malformed input
  // or zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  double to_double() const;
  std::string str() const;

  bool operator==(const Rational&) const = default;
};

// Exact test of  lhs > scale * factor  for integer lhs, factor >= 0.
// Evaluated in 128-bit arithmetic, no rounding.
bool exceeds_scaled(std::int64_t lhs, const Rational& scale, std::int64_t factor);

}  // namespace rspunct
