#pragma once

#include <cstdint>
#include <vector>

#include "galmod/fpg/module.hpp"
#include "json.hpp"

namespace galmod {

/// An ambient module W, a free submodule V = <v_1, ..., v_k> and a witness
/// delta in ker (sigma - 1)^(p^n - 1) but outside V.
struct FamilyInput {
  FpGModule ambient;
  std::vector<VectorFp> generators;
  VectorFp delta;

  std::size_t rank() const { return generators.size(); }
  Submodule free_part() const { return submodule_generated(ambient, generators); }
};

struct HypothesisReport {
  bool v_free = false;
  bool delta_in_kernel = false;
  bool delta_outside_v = false;

  bool all() const { return v_free && delta_in_kernel && delta_outside_v; }
};

HypothesisReport check_hypotheses(const FamilyInput& input);
/// Throws NotFree, DeltaNotInKernel or DeltaInV for the first failing hypothesis.
void validate(const FamilyInput& input);

struct FamilyMember {
  VectorFp c;
  std::vector<VectorFp> generators;  // v_i + c_i delta
  Submodule submodule;
};

struct FamilyOutput {
  std::vector<FamilyMember> members;  // c in lexicographic order, c = 0 first
};

/// The p^k submodules <v_1 + c_1 delta, ..., v_k + c_k delta>, c in F_p^k.
FamilyOutput build_family(const FamilyInput& input);

struct FamilyVerification {
  bool all_free = true;
  bool pairwise_distinct = true;
  bool delta_outside_members = true;
  bool first_is_v = true;

  bool all() const { return all_free && pairwise_distinct && delta_outside_members && first_is_v; }
};

FamilyVerification verify_family(const FamilyInput& input, const FamilyOutput& output);

/// Relation-freeness of {v_i + c_i delta}: their span has dimension k p^n.
/// Does not check the family hypotheses.
bool no_relation_check(const FamilyInput& input, const VectorFp& c);

/// Every distinct free rank-k submodule of W, found by enumerating all
/// k-tuples of generators.  TooLarge once p^(k dim W) exceeds max_tuples.
std::vector<Submodule> exhaustive_free_submodules(const FpGModule& w, std::size_t k, std::uint64_t max_tuples = 1u << 20);
std::uint64_t exhaustive_free_count(const FpGModule& w, std::size_t k, std::uint64_t max_tuples = 1u << 20);

/// W = F_p[G]^k + F_p (trivial), v_i the i-th regular generator, delta the
/// trivial basis vector.
FamilyInput canonical_family_input(const GroupContext& ctx, std::size_t k);

/// {p, n, k, members: [{c, basis}]}
nlohmann::json family_to_json(const FamilyInput& input, const FamilyOutput& output);

}  // namespace galmod
