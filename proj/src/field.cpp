#include "rspunct/field.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace rspunct {

bool PrimeField::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > 0x7FFFFFFFu || !is_prime(p))
    throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime in [2, 2^31)");
}

std::uint32_t PrimeField::check(std::uint32_t a) const {
  if (a >= p_)
    throw std::invalid_argument("PrimeField: value " + std::to_string(a) + " not reduced mod " +
                                std::to_string(p_));
  return a;
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
  const std::uint64_t s = std::uint64_t{check(a)} + check(b);
  return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const {
  check(a);
  check(b);
  return a >= b ? a - b : a + p_ - b;
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>(std::uint64_t{check(a)} * check(b) % p_);
}

std::uint32_t PrimeField::neg(std::uint32_t a) const {
  check(a);
  return a == 0 ? 0 : p_ - a;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (check(a) == 0) throw std::invalid_argument("PrimeField: zero has no inverse");
  // Extended Euclid on (a, p); p prime so gcd is 1.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  check(a);
  std::uint64_t base = a, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::vector<std::uint32_t> PrimeField::elements() const {
  std::vector<std::uint32_t> out(p_);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

FieldElement::FieldElement(std::uint32_t value, const PrimeField& field)
    : value_(value), p_(field.order()) {
  if (value_ >= p_)
    throw std::invalid_argument("FieldElement: value " + std::to_string(value) +
                                " not reduced mod " + std::to_string(p_));
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("FieldElement: mixed moduli " + std::to_string(p_) + " and " +
                                std::to_string(o.p_));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  const std::uint64_t s = std::uint64_t{value_} + o.value_;
  return FieldElement(static_cast<std::uint32_t>(s >= p_ ? s - p_ : s), p_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_, p_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(static_cast<std::uint32_t>(std::uint64_t{value_} * o.value_ % p_), p_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : p_ - value_, p_);
}

FieldElement FieldElement::inverse() const {
  return FieldElement(PrimeField(p_).inv(value_), p_);
}

}  // namespace rspunct
