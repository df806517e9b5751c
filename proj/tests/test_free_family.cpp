#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "doctest.h"
#include "fpg_oracles.hpp"
#include "galmod/error.hpp"
#include "galmod/family/free_family.hpp"

using namespace galmod;

namespace {

const std::vector<std::array<std::uint32_t, 3>> kSweep = {{2, 1, 1}, {2, 2, 1}, {2, 2, 2},
                                                          {3, 1, 1}, {3, 1, 2}, {5, 1, 1}};

/// Free rank-k hyperplanes of W, found without submodule_generated: a
/// hyperplane ker(phi) is sigma-stable iff phi(sigma - 1) = 0, and a
/// stable subspace of dimension k p^n is free iff it has exactly p^k fixed
/// vectors.  Only used when dim W = k p^n + 1.
std::set<std::vector<std::uint32_t>> free_hyperplanes_by_count(const FpGModule& w, std::size_t k) {
  const std::uint32_t p = w.p();
  const std::size_t d = w.dim();
  std::set<std::vector<std::uint32_t>> out;
  const std::uint64_t total = oracle::ipow(p, static_cast<std::uint32_t>(d));
  for (std::uint64_t code = 1; code < total; ++code) {
    const VectorFp phi = oracle::vector_from_code(code, d, p);
    std::size_t lead = 0;
    while (phi[lead] == 0) ++lead;
    if (phi[lead] != 1) continue;
    auto apply_phi = [&](const VectorFp& v) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < d; ++i) s += std::uint64_t{phi[i]} * v[i];
      return static_cast<std::uint32_t>(s % p);
    };
    bool stable = true;
    for (std::size_t j = 0; j < d && stable; ++j) {
      VectorFp e(d, 0);
      e[j] = 1;
      stable = apply_phi(w.act(e)) == apply_phi(e);
    }
    if (!stable) continue;
    std::uint64_t fixed = 0;
    std::vector<VectorFp> members;
    for (std::uint64_t c = 0; c < total; ++c) {
      const VectorFp v = oracle::vector_from_code(c, d, p);
      if (apply_phi(v) != 0) continue;
      members.push_back(v);
      if (w.act(v) == v) ++fixed;
    }
    if (fixed != oracle::ipow(p, static_cast<std::uint32_t>(k))) continue;
    // Canonical form independent of rref: the sorted member list.
    std::vector<std::uint32_t> key;
    for (const auto& v : members) key.insert(key.end(), v.begin(), v.end());
    out.insert(key);
  }
  return out;
}

std::vector<std::uint32_t> member_key(const Submodule& s) {
  const std::uint32_t p = s.parent().p();
  const std::size_t d = s.parent().dim();
  std::vector<VectorFp> members;
  const std::uint64_t total = oracle::ipow(p, static_cast<std::uint32_t>(d));
  for (std::uint64_t c = 0; c < total; ++c) {
    VectorFp v = oracle::vector_from_code(c, d, p);
    if (s.contains(v)) members.push_back(std::move(v));
  }
  std::vector<std::uint32_t> key;
  for (const auto& v : members) key.insert(key.end(), v.begin(), v.end());
  return key;
}

FamilyInput conjugate_input(const FamilyInput& in, const MatrixFp& P) {
  FamilyInput out{in.ambient.conjugated(P), {}, P.apply(in.delta)};
  for (const auto& v : in.generators) out.generators.push_back(P.apply(v));
  return out;
}

MatrixFp random_invertible(std::size_t d, std::uint32_t p, std::mt19937_64& rng) {
  for (;;) {
    MatrixFp m(d, d, p);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m.set(i, j, rng() % p);
    if (m.rank() == d) return m;
  }
}

}  // namespace

TEST_CASE("family of Z/4 over F_2 with one generator") {
  const GroupContext ctx(2, 2);
  const FamilyInput in = canonical_family_input(ctx, 1);
  CHECK(in.ambient.dim() == 5);
  const FamilyOutput out = build_family(in);
  REQUIRE(out.members.size() == 2);
  CHECK(out.members[0].c == VectorFp{0});
  CHECK(out.members[1].c == VectorFp{1});
  CHECK(out.members[0].submodule == in.free_part());
  CHECK(out.members[1].generators[0] == VectorFp{1, 0, 0, 0, 1});
  CHECK_FALSE(out.members[0].submodule == out.members[1].submodule);
  CHECK(verify_family(in, out).all());
}

TEST_CASE("family of Z/3 over F_3 with two generators has nine members") {
  const FamilyInput in = canonical_family_input(GroupContext(3, 1), 2);
  const FamilyOutput out = build_family(in);
  CHECK(out.members.size() == 9);
  CHECK(verify_family(in, out).all());
  CHECK(out.members[5].c == VectorFp{1, 2});
}

TEST_CASE("hypothesis violations are reported by kind") {
  const GroupContext ctx(2, 2);
  FamilyInput in = canonical_family_input(ctx, 1);

  SUBCASE("V not free") {
    in.generators[0] = VectorFp{1, 1, 0, 0, 0};  // (sigma - 1) e_0, a cyclic module of length 3
    CHECK_FALSE(check_hypotheses(in).v_free);
    try {
      build_family(in);
      FAIL("expected NotFree");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotFree);
    }
  }
  SUBCASE("delta in V") {
    in.delta = VectorFp{1, 1, 1, 1, 0};
    CHECK(check_hypotheses(in).delta_in_kernel);
    CHECK_FALSE(check_hypotheses(in).delta_outside_v);
    try {
      build_family(in);
      FAIL("expected DeltaInV");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DeltaInV);
    }
  }
  SUBCASE("delta outside the kernel") {
    FamilyInput bad{direct_sum(FpGModule::regular(ctx), FpGModule::regular(ctx)), {VectorFp(8, 0)}, VectorFp(8, 0)};
    bad.generators[0][0] = 1;
    bad.delta[4] = 1;
    CHECK(check_hypotheses(bad).v_free);
    CHECK_FALSE(check_hypotheses(bad).delta_in_kernel);
    try {
      validate(bad);
      FAIL("expected DeltaNotInKernel");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DeltaNotInKernel);
    }
  }
}

TEST_CASE("exhaustive free counts") {
  CHECK(exhaustive_free_count(canonical_family_input(GroupContext(2, 2), 1).ambient, 1) == 2);
  CHECK(exhaustive_free_count(canonical_family_input(GroupContext(3, 1), 1).ambient, 1) == 3);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    CHECK(exhaustive_free_count(FpGModule::regular(GroupContext(p, n)), 1) == 1);
  }
  CHECK(exhaustive_free_count(FpGModule::trivial(GroupContext(2, 1), 3), 1) == 0);
  try {
    exhaustive_free_count(canonical_family_input(GroupContext(3, 1), 2).ambient, 2, 1u << 20);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("family size, freeness and distinctness across the sweep") {
  std::mt19937_64 rng(11);
  for (const auto& [p, n, k] : kSweep) {
    CAPTURE(p);
    CAPTURE(n);
    CAPTURE(k);
    const FamilyInput base = canonical_family_input(GroupContext(p, n), k);
    for (int trial = 0; trial < 3; ++trial) {
      const FamilyInput in = trial == 0 ? base : conjugate_input(base, random_invertible(base.ambient.dim(), p, rng));
      const FamilyOutput out = build_family(in);
      CHECK(out.members.size() == oracle::ipow(p, k));
      const FamilyVerification v = verify_family(in, out);
      CHECK(v.all_free);
      CHECK(v.pairwise_distinct);
      CHECK(v.delta_outside_members);
      CHECK(v.first_is_v);
      for (const auto& m : out.members) CHECK(no_relation_check(in, m.c));
      const FamilyOutput again = build_family(in);
      REQUIRE(again.members.size() == out.members.size());
      for (std::size_t i = 0; i < out.members.size(); ++i) {
        CHECK(again.members[i].c == out.members[i].c);
        CHECK(again.members[i].submodule == out.members[i].submodule);
      }
    }
  }
}

TEST_CASE("family members are exactly the free hyperplanes found by counting") {
  // In W = F_p[G]^k + F_p every free rank-k submodule is a hyperplane, and
  // there are exactly p^k of them.
  for (const auto& [p, n, k] : kSweep) {
    CAPTURE(p);
    CAPTURE(n);
    CAPTURE(k);
    const FamilyInput in = canonical_family_input(GroupContext(p, n), k);
    const auto oracle_set = free_hyperplanes_by_count(in.ambient, k);
    CHECK(oracle_set.size() == oracle::ipow(p, k));
    std::set<std::vector<std::uint32_t>> family_set;
    for (const auto& m : build_family(in).members) family_set.insert(member_key(m.submodule));
    CHECK(family_set == oracle_set);
  }
}

TEST_CASE("exhaustive oracle agrees with the family where feasible") {
  for (const auto& [p, n, k] : kSweep) {
    const FamilyInput in = canonical_family_input(GroupContext(p, n), k);
    const std::uint64_t tuples = oracle::ipow(p, static_cast<std::uint32_t>(in.ambient.dim() * k));
    if (tuples > (1u << 18)) continue;
    CAPTURE(p);
    CAPTURE(n);
    CAPTURE(k);
    const auto found = exhaustive_free_submodules(in.ambient, k, 1u << 18);
    CHECK(found.size() >= oracle::ipow(p, k));
    for (const auto& m : build_family(in).members) {
      CHECK(std::find(found.begin(), found.end(), m.submodule) != found.end());
    }
  }
}

TEST_CASE("no_relation_check on crafted and degenerate inputs") {
  const GroupContext ctx(3, 1);
  const FpGModule w = FpGModule::regular(ctx);
  // delta = (sigma - 1) v - v, so v + delta = (sigma - 1) v spans a shorter module.
  const VectorFp v{1, 0, 0};
  const VectorFp sv = w.act(v);
  const VectorFp delta{(sv[0] + 3 - 2 * v[0]) % 3, (sv[1] + 3 - 2 * v[1]) % 3, (sv[2] + 3 - 2 * v[2]) % 3};
  const FamilyInput crafted{w, {v}, delta};
  CHECK(no_relation_check(crafted, VectorFp{0}));
  CHECK_FALSE(no_relation_check(crafted, VectorFp{1}));

  const FamilyInput empty = canonical_family_input(ctx, 0);
  CHECK(no_relation_check(empty, VectorFp{}));
  CHECK(build_family(empty).members.size() == 1);
}

TEST_CASE("family JSON layout") {
  const FamilyInput in = canonical_family_input(GroupContext(2, 2), 1);
  const nlohmann::json j = family_to_json(in, build_family(in));
  CHECK(j["p"] == 2);
  CHECK(j["n"] == 2);
  CHECK(j["k"] == 1);
  REQUIRE(j["members"].size() == 2);
  CHECK(j["members"][1]["c"] == nlohmann::json::array({1}));
  CHECK(j["members"][0]["basis"].size() == 4);
}
