#pragma once

// Brute-force references used only by the tests.  Nothing here calls the
// library's algorithms for the quantity being checked.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Coeffs = std::vector<std::uint32_t>;  // constant term first

/// Coefficients of the monic polynomial with integer code `code` (lower
/// coefficients as base-p digits) and degree m.
inline Coeffs monic_from_code(std::uint64_t code, std::uint32_t m, std::uint32_t p) {
  Coeffs f(m + 1, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[m] = 1;
  return f;
}

/// Schoolbook remainder of a by monic b over F_p.
inline Coeffs remainder(Coeffs a, const Coeffs& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t d = a.size(); d-- > db;) {
    const std::uint32_t c = a[d] % p;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      a[d - db + i] = static_cast<std::uint32_t>((a[d - db + i] + (p - c) * b[i]) % p);
    }
  }
  a.resize(db);
  return a;
}

inline bool is_zero(const Coeffs& a) {
  for (auto x : a) {
    if (x != 0) return false;
  }
  return true;
}

/// Irreducible iff no monic factor of degree 1..m/2 divides it.
inline bool irreducible_by_trial_division(const Coeffs& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (is_zero(remainder(f, monic_from_code(code, d, p), p))) return false;
    }
  }
  return true;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
