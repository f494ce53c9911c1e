#include "rspunct/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rspunct {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rational::from_double: non-finite value");
  if (x == 0.0) return Rational(0, 1);
  int exp = 0;
  const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));  // exact 53-bit integer
  exp -= 53;
  while (scaled % 2 == 0 && exp < 0) {
    scaled /= 2;
    ++exp;
  }
  if (exp > 10 || exp < -62) throw std::invalid_argument("Rational::from_double: value out of range");
  if (exp >= 0) {
    const std::int64_t f = std::int64_t{1} << exp;
    if (scaled > INT64_MAX / f || scaled < INT64_MIN / f)
      throw std::invalid_argument("Rational::from_double: value out of range");
    return Rational(scaled * f, 1);
  }
  return Rational(scaled, std::int64_t{1} << -exp);
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto n = parse_int(text.substr(0, slash));
    const auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    const std::string_view fp = text.substr(dot + 1);
    if (fp.empty() || fp.size() > 18) return std::nullopt;
    bool neg = false;
    if (!ip.empty() && (ip.front() == '+' || ip.front() == '-')) {
      neg = ip.front() == '-';
      ip.remove_prefix(1);
    }
    const auto whole = ip.empty() ? std::optional<std::int64_t>(0) : parse_int(ip);
    const auto frac = parse_int(fp);
    if (!whole || !frac || *whole < 0 || *frac < 0) return std::nullopt;
    std::int64_t den = 1;
    for (size_t i = 0; i < fp.size(); ++i) {
      if (den > INT64_MAX / 10) return std::nullopt;
      den *= 10;
    }
    if (*whole > (INT64_MAX - *frac) / den) return std::nullopt;
    const std::int64_t n = *whole * den + *frac;
    return Rational(neg ? -n : n, den);
  }
  const auto n = parse_int(text);
  if (!n) return std::nullopt;
  return Rational(*n, 1);
}

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool exceeds_scaled(std::int64_t lhs, const Rational& scale, std::int64_t factor) {
  // lhs > (num/den) * factor  <=>  lhs * den > num * factor   (den > 0)
  const __int128 left = static_cast<__int128>(lhs) * scale.den;
  const __int128 right = static_cast<__int128>(scale.num) * factor;
  return left > right;
}

}  // namespace rspunct
