#pragma once

#include <cstdint>
#include <vector>

namespace rspunct {

// Arithmetic in GF(p) for prime p. Elements are canonical residues in
// [0, p), stored as uint32_t; p itself must fit in 31 bits so products fit
// in uint64_t without overflow.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);  // throws std::invalid_argument unless p is prime

  std::uint32_t order() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws std::invalid_argument on a == 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // All field elements in ascending order: 0, 1, ..., p-1.
  std::vector<std::uint32_t> elements() const;

  bool operator==(const PrimeField&) const = default;

  static bool is_prime(std::uint32_t n);

 private:
  std::uint32_t check(std::uint32_t a) const;  // validates a < p
  std::uint32_t p_;
};

// A field element bundled with its modulus, for callers that want operator
// syntax with mixed-field misuse caught at run time.
class FieldElement {
 public:
  FieldElement(std::uint32_t value, const PrimeField& field);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;  // throws std::invalid_argument on zero

  bool operator==(const FieldElement&) const = default;

 private:
  FieldElement(std::uint32_t value, std::uint32_t p) : value_(value), p_(p) {}
  void check_same_field(const FieldElement& o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

}  // namespace rspunct
