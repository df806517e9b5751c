#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "galmod/algebra/ext_field.hpp"
#include "json.hpp"

namespace galmod {

/// F_q inside L = F_(q^p), with wp tabulated on L so that a root of
/// x^p - x - gamma can be looked up for every gamma in F_q.  tau is the
/// relative Frobenius x -> x^q generating Gal(L / F_q).
class PairingField {
 public:
  /// q = p^(p^n); TooLarge when q^p exceeds max_big.
  PairingField(std::uint32_t p, std::uint32_t n, std::uint64_t max_big = 1u << 20);

  std::uint32_t p() const { return base_.characteristic(); }
  const ExtField& base() const { return base_; }
  const ExtField& big() const { return big_; }
  const ExtFieldElement& embedding_root() const { return root_; }
  ExtFieldElement to_big(const ExtFieldElement& x) const;
  /// Some y in L with y^p - y = x.
  ExtFieldElement wp_root(const ExtFieldElement& x_in_big) const;
  /// tau^a.
  ExtFieldElement tau_power(const ExtFieldElement& x, std::uint64_t a) const;

 private:
  ExtField base_, big_;
  ExtFieldElement root_;
  std::vector<std::uint64_t> wp_root_;  // index of wp(y) -> index of y
};

/// gamma in F_q with x^p - x - gamma irreducible over F_q, and a root rho in L.
struct PairingInstance {
  std::shared_ptr<const PairingField> field;
  ExtFieldElement gamma;
  ExtFieldElement rho;
};

/// Throws ReduciblePolynomial when x^p - x - gamma has a root in F_q.
PairingInstance make_pairing_instance(std::shared_ptr<const PairingField> field, const ExtFieldElement& gamma);

/// <tau^a, gamma> = tau^a(rho') - rho' with rho' = rho + c, an element of F_p.
std::uint32_t pairing(const PairingInstance& inst, std::uint64_t a, std::uint32_t c = 0);

struct PairingReport {
  std::uint32_t p = 0, n = 0;
  std::uint64_t q = 0, big = 0;
  bool values_in_prime_field = true;
  bool root_choice_independent = true;
  bool bilinear = true;
  bool right_kernel_is_wp = true;  // gamma pairing to 0 with every tau^a are exactly wp(F_q)
  bool left_kernel_trivial = true;
  bool equivariant = true;
  std::uint64_t wp_image_size = 0;
  std::vector<std::vector<std::uint32_t>> theta_table;  // [a][c] = <tau^a, c theta>

  bool perfect() const { return right_kernel_is_wp && left_kernel_trivial && q / wp_image_size == p; }
  bool passed() const {
    return values_in_prime_field && root_choice_independent && bilinear && perfect() && equivariant;
  }
};

/// Exhaustive over all gamma in F_q, all tau in Gal(L/F_q), all roots, and
/// all lifts of sigma to Gal(L/F_p).
PairingReport pairing_perfect_equivariant(std::uint32_t p, std::uint32_t n, std::uint64_t max_big = 1u << 16);
nlohmann::json to_json(const PairingReport& r);

}  // namespace galmod
