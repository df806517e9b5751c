#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galmod/as/normal_form.hpp"
#include "galmod/family/free_family.hpp"
#include "galmod/fpg/module.hpp"

namespace galmod {

/// A finite sigma-stable piece of K / wp(K): the F_p-span of the G-orbits
/// of some normal forms, with its basis taken from those orbits.
class ASWindow {
 public:
  const FpGModule& module() const { return module_; }
  const std::vector<ASNormalForm>& basis() const { return basis_; }
  /// Throws OutOfRange when nf is not in the window.
  VectorFp coordinates_of(const ASNormalForm& nf) const;
  std::optional<VectorFp> try_coordinates_of(const ASNormalForm& nf) const;
  ASNormalForm normal_form(const VectorFp& v) const;

 private:
  ASWindow(const ASContext& ctx, std::vector<ASNormalForm> basis, std::vector<std::uint64_t> slots,
           bool constant_slot, MatrixFp basis_slots, FpGModule module);

  std::optional<VectorFp> slot_vector(const ASNormalForm& nf) const;

  ASContext ctx_;
  std::vector<ASNormalForm> basis_;
  // monomial slots: pole keys then polynomial degrees, encoded by slot_code
  std::vector<std::uint64_t> slots_;
  bool constant_slot_;
  MatrixFp basis_slots_;  // columns are slot vectors of the basis
  FpGModule module_;

  friend ASWindow orbit_module(const std::vector<ASNormalForm>& gens, const ASContext& ctx);
};

ASWindow orbit_module(const std::vector<ASNormalForm>& gens, const ASContext& ctx);

/// find_witness output: W is the window of 1/(t - alpha_i) and delta.
struct Witness {
  ASWindow window;
  FamilyInput input;
  std::vector<ExtFieldElement> alphas;
  ASNormalForm delta;
};

/// alpha_1 < ... < alpha_k are the smallest representatives of distinct
/// Frobenius orbits of size p^n; delta defaults to the class of t.
/// Throws NotEnoughOrbits, or a FamilyInput hypothesis error for a bad delta.
Witness find_witness(const ASContext& ctx, std::size_t k, const std::optional<RatFn>& delta = std::nullopt);

struct DefiningSet {
  VectorFp c;
  std::vector<std::string> generators;   // rational functions gamma
  std::vector<std::string> polynomials;  // x^p - x - (gamma)
  Submodule submodule;
};

struct Realization {
  Witness witness;
  FamilyOutput family;
  std::vector<DefiningSet> sets;
};

/// Throws HypothesisViolation for p = 2, n = 1.
Realization realize(const ASContext& ctx, std::size_t k, const std::optional<RatFn>& delta = std::nullopt);

/// {p, n, k, field, alphas, delta, family: [{c, generators, polynomials}]}
nlohmann::json to_json(const Realization& r, const ASContext& ctx);

}  // namespace galmod
