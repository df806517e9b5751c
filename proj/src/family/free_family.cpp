#include "galmod/family/free_family.hpp"

#include <set>

#include "galmod/error.hpp"
#include "galmod/fpg/serialize.hpp"

namespace galmod {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

VectorFp digits(std::uint64_t code, std::size_t len, std::uint32_t p) {
  VectorFp v(len);
  for (std::size_t i = len; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

std::vector<VectorFp> member_generators(const FamilyInput& input, const VectorFp& c) {
  const std::uint32_t p = input.ambient.p();
  std::vector<VectorFp> gens;
  for (std::size_t i = 0; i < input.rank(); ++i) {
    gens.push_back(add_vectors(input.generators[i], scale_vector(input.delta, c.at(i), p), p));
  }
  return gens;
}

}  // namespace

HypothesisReport check_hypotheses(const FamilyInput& input) {
  const FpGModule& w = input.ambient;
  if (input.delta.size() != w.dim()) throw Error(ErrorKind::DimensionMismatch, "delta has the wrong length");
  HypothesisReport r;
  const Submodule v = input.free_part();
  r.v_free = is_free(v, input.rank());
  r.delta_in_kernel = kernel_power(w, w.context().order() - 1).contains(input.delta);
  r.delta_outside_v = !v.contains(input.delta);
  return r;
}

void validate(const FamilyInput& input) {
  const HypothesisReport r = check_hypotheses(input);
  if (!r.v_free) {
    throw Error(ErrorKind::NotFree, "V is not free of rank " + std::to_string(input.rank()));
  }
  if (!r.delta_in_kernel) {
    throw Error(ErrorKind::DeltaNotInKernel,
                "delta is not killed by (sigma - 1)^" + std::to_string(input.ambient.context().order() - 1));
  }
  if (!r.delta_outside_v) throw Error(ErrorKind::DeltaInV, "delta lies in V");
}

FamilyOutput build_family(const FamilyInput& input) {
  validate(input);
  const std::uint32_t p = input.ambient.p();
  const std::size_t k = input.rank();
  const std::uint64_t count = checked_power(p, k, std::uint64_t{1} << 24);
  if (count > (std::uint64_t{1} << 24)) throw Error(ErrorKind::TooLarge, "p^k exceeds 2^24 family members");
  FamilyOutput out;
  out.members.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    VectorFp c = digits(code, k, p);
    auto gens = member_generators(input, c);
    Submodule s = submodule_generated(input.ambient, gens);
    out.members.push_back({std::move(c), std::move(gens), std::move(s)});
  }
  return out;
}

FamilyVerification verify_family(const FamilyInput& input, const FamilyOutput& output) {
  FamilyVerification v;
  const std::size_t k = input.rank();
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& m : output.members) {
    v.all_free = v.all_free && is_free(m.submodule, k);
    v.delta_outside_members = v.delta_outside_members && !m.submodule.contains(input.delta);
    v.pairwise_distinct = seen.insert(m.submodule.basis().entries()).second && v.pairwise_distinct;
  }
  v.first_is_v = !output.members.empty() && output.members.front().submodule == input.free_part();
  return v;
}

bool no_relation_check(const FamilyInput& input, const VectorFp& c) {
  if (c.size() != input.rank()) throw Error(ErrorKind::DimensionMismatch, "c must have one entry per generator");
  return submodule_generated(input.ambient, member_generators(input, c)).dim() ==
         input.rank() * input.ambient.context().order();
}

std::vector<Submodule> exhaustive_free_submodules(const FpGModule& w, std::size_t k, std::uint64_t max_tuples) {
  const std::uint32_t p = w.p();
  const std::uint64_t vectors = checked_power(p, w.dim(), max_tuples);
  const std::uint64_t tuples = checked_power(p, w.dim() * k, max_tuples);
  if (tuples > max_tuples) {
    throw Error(ErrorKind::TooLarge, "enumerating " + std::to_string(p) + "^" + std::to_string(w.dim() * k) +
                                         " generator tuples exceeds the bound " + std::to_string(max_tuples));
  }
  const std::size_t target_dim = k * w.context().order();
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Submodule> found;
  std::vector<std::uint64_t> codes(k, 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t rest = t;
    std::vector<VectorFp> gens;
    for (std::size_t i = 0; i < k; ++i) {
      VectorFp v = digits(rest % vectors, w.dim(), p);
      rest /= vectors;
      gens.push_back(std::move(v));
    }
    Submodule s = submodule_generated(w, gens);
    if (s.dim() != target_dim || !is_free(s, k)) continue;
    if (seen.insert(s.basis().entries()).second) found.push_back(std::move(s));
  }
  return found;
}

std::uint64_t exhaustive_free_count(const FpGModule& w, std::size_t k, std::uint64_t max_tuples) {
  return exhaustive_free_submodules(w, k, max_tuples).size();
}

FamilyInput canonical_family_input(const GroupContext& ctx, std::size_t k) {
  const FpGModule w = direct_sum(FpGModule::free(ctx, k), FpGModule::trivial(ctx, 1));
  const std::size_t N = ctx.order();
  FamilyInput in{w, {}, VectorFp(w.dim(), 0)};
  for (std::size_t i = 0; i < k; ++i) {
    VectorFp v(w.dim(), 0);
    v[i * N] = 1;
    in.generators.push_back(std::move(v));
  }
  in.delta[k * N] = 1;
  return in;
}

nlohmann::json family_to_json(const FamilyInput& input, const FamilyOutput& output) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : output.members) members.push_back({{"c", m.c}, {"basis", rows_to_json(m.submodule.basis())}});
  const auto& ctx = input.ambient.context();
  return {{"p", ctx.p()}, {"n", ctx.n()}, {"k", input.rank()}, {"members", std::move(members)}};
}

}  // namespace galmod
