#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "galmod/fpg/module.hpp"
#include "galmod/group/semidirect.hpp"
#include "json.hpp"

namespace galmod {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedc0de;

/// Above `cutoff` checks a verification samples `samples` random cases
/// drawn from mt19937_64(seed) instead of enumerating.
struct VerifyOptions {
  std::uint64_t cutoff = std::uint64_t{1} << 20;
  std::uint64_t samples = std::uint64_t{1} << 16;
  std::uint64_t seed = kDefaultSeed;
};

struct CheckReport {
  std::string check;
  std::uint32_t p = 0, n = 0;
  std::size_t k = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;  // elements, pairs or functionals examined
  bool passed = false;
  nlohmann::json result;
  nlohmann::json details = nlohmann::json::object();
  std::optional<nlohmann::json> counterexample;
};

/// {check, p, n, k, mode: exhaustive|sampled, seed, checked, result, passed, details, counterexample?}
nlohmann::json to_json(const CheckReport& r);

/// Identity, inverses and associativity.  Triples are enumerated when
/// order^3 <= cutoff.
CheckReport group_axioms_check(const GroupContext& ctx, std::size_t k, const VerifyOptions& opts = {});

/// For every (m, j): (m, j)^(p^n) = ((sigma^j - 1)^(p^n - 1) m, 0), with every
/// component of the result in (sigma - 1) F_p[G].
CheckReport pn_power_formula_check(const GroupContext& ctx, std::size_t k, const VerifyOptions& opts = {});

/// lcm of all element orders.  TooLarge when the group has more than
/// max_elements elements.
std::uint64_t exponent(const GroupContext& ctx, std::size_t k, std::uint64_t max_elements = std::uint64_t{1} << 20);
/// exponent() against the expected p^(n+1) (k >= 1) or p^n (k = 0).
CheckReport exponent_check(const GroupContext& ctx, std::size_t k, const VerifyOptions& opts = {});

/// Every sigma-stable hyperplane of F_p[G]^k contains (sigma - 1) F_p[G]^k.
/// Hyperplanes are enumerated as normalized functionals; TooLarge past cutoff.
CheckReport index_p_submodules_contain_augmentation_image(const GroupContext& ctx, std::size_t k,
                                                          const VerifyOptions& opts = {});

/// The diagonal map (m_1..m_k, j) -> ((m_1, j), ..., (m_k, j)) is a
/// homomorphism onto the equal-j subgroup of (F_p[G] x| G)^k and is
/// injective.  Needs k >= 1; TooLarge when the domain exceeds cutoff.
CheckReport fiber_product_isomorphism(const GroupContext& ctx, std::size_t k, const VerifyOptions& opts = {});

/// |H^2(G, M)| = p^(dim H^2), the number of extension classes of G by M.
std::uint64_t h2_witness_extension_count(const FpGModule& m);

}  // namespace galmod
