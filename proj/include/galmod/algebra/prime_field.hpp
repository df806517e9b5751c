#pragma once

#include <cstdint>
#include <ostream>

namespace galmod {

bool is_prime(std::uint64_t n);

/// Raw residue arithmetic mod a small prime.  Residues are kept in [0, p);
/// p must be below 2^31 so sums never overflow.
namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
/// Inverse of a nonzero residue.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace modp

/// Element of F_p.  The modulus is checked for primality on construction.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator/(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;

  bool operator==(const PrimeFieldElement& o) const = default;

 private:
  struct Unchecked {};
  PrimeFieldElement(Unchecked, std::uint32_t value, std::uint32_t p) : value_(value), p_(p) {}
  void check_same(const PrimeFieldElement& o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x);

}  // namespace galmod
