#include "galmod/algebra/prime_field.hpp"

#include "galmod/error.hpp"

namespace galmod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::DenominatorDoesNotSplit: return "DenominatorDoesNotSplit";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::DeltaInV: return "DeltaInV";
    case ErrorKind::DeltaNotInKernel: return "DeltaNotInKernel";
    case ErrorKind::NotEnoughOrbits: return "NotEnoughOrbits";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  std::uint32_t base = a % p;
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorKind::OutOfRange, "inverse of zero in F_" + std::to_string(p));
  return pow(a, p - 2, p);
}

}  // namespace modp

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  value_ = modp::reduce(value, p);
}

void PrimeFieldElement::check_same(const PrimeFieldElement& o) const {
  if (p_ != o.p_) throw Error(ErrorKind::ContextMismatch, "elements of different prime fields");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  check_same(o);
  return {Unchecked{}, modp::add(value_, o.value_, p_), p_};
}
PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  check_same(o);
  return {Unchecked{}, modp::sub(value_, o.value_, p_), p_};
}
PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  check_same(o);
  return {Unchecked{}, modp::mul(value_, o.value_, p_), p_};
}
PrimeFieldElement PrimeFieldElement::operator/(const PrimeFieldElement& o) const {
  return *this * o.inverse();
}
PrimeFieldElement PrimeFieldElement::operator-() const { return {Unchecked{}, modp::neg(value_, p_), p_}; }
PrimeFieldElement PrimeFieldElement::inverse() const { return {Unchecked{}, modp::inv(value_, p_), p_}; }

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) { return os << x.value(); }

}  // namespace galmod
