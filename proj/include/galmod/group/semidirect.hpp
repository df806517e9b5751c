#pragma once

#include <cstdint>
#include <vector>

#include "galmod/fpg/group_algebra.hpp"
#include "json.hpp"

namespace galmod {

/// Element (m, j) of F_p[G]^k x| G, where sigma^j acts on m by left
/// multiplication:  (m, j)(m', j') = (m + sigma^j m', j + j').
struct SemidirectElement {
  GroupContext ctx;
  std::vector<GroupAlgebraElement> m;
  std::uint32_t j = 0;

  const GroupContext& context() const { return ctx; }
  std::size_t rank() const { return m.size(); }
  bool operator==(const SemidirectElement& o) const = default;
};

SemidirectElement semidirect_identity(const GroupContext& ctx, std::size_t k);
SemidirectElement multiply(const SemidirectElement& a, const SemidirectElement& b);
SemidirectElement inverse(const SemidirectElement& a);
/// Square-and-multiply; negative exponents go through the inverse.
SemidirectElement power(const SemidirectElement& a, std::int64_t e);
/// Smallest e >= 1 with a^e = 1, by repeated multiplication.
std::uint64_t element_order(const SemidirectElement& a);

/// p^(k p^n + n), or TooLarge if that does not fit in 62 bits.
std::uint64_t semidirect_order(const GroupContext& ctx, std::size_t k);
/// Bijection [0, order) <-> elements.  The coefficients of m, component by
/// component, are the low base-p digits; j is the top digit (base p^n).
SemidirectElement element_from_index(const GroupContext& ctx, std::size_t k, std::uint64_t index);
std::uint64_t element_index(const SemidirectElement& a);

/// {"m": [[coeffs in the sigma-power basis], ...], "j": j}
nlohmann::json to_json(const SemidirectElement& a);

}  // namespace galmod
