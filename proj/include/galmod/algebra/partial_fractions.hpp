#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "galmod/algebra/ratfn.hpp"

namespace galmod {

struct PoleExpansion {
  ExtFieldElement alpha;
  /// coeffs[i - 1] multiplies 1/(t - alpha)^i.
  std::vector<ExtFieldElement> coeffs;
};

/// f = polynomial_part + sum over poles of sum_i c_{alpha,i} / (t - alpha)^i.
struct PartialFractions {
  Poly polynomial_part;
  std::vector<PoleExpansion> poles;  // ordered by alpha

  RatFn recombine() const;
};

/// Roots of a nonzero polynomial with multiplicities, by enumerating the
/// coefficient field.  `remainder` receives the cofactor free of linear factors.
std::vector<std::pair<ExtFieldElement, unsigned>> linear_factors(const Poly& f, Poly* remainder = nullptr,
                                                                  std::uint64_t max_field_size = 1u << 20);

/// Throws DenominatorDoesNotSplit when the denominator keeps an irreducible
/// factor of degree > 1 over the coefficient field.
PartialFractions partial_fractions(const RatFn& f, std::uint64_t max_field_size = 1u << 20);

}  // namespace galmod
