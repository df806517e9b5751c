#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "galmod/error.hpp"
#include "galmod/group/checks.hpp"

using namespace galmod;

namespace {

SemidirectElement random_element(const GroupContext& ctx, std::size_t k, std::mt19937_64& rng) {
  return element_from_index(ctx, k, rng() % semidirect_order(ctx, k));
}

SemidirectElement repeated_product(const SemidirectElement& g, std::uint64_t e) {
  SemidirectElement x = semidirect_identity(g.ctx, g.rank());
  for (std::uint64_t i = 0; i < e; ++i) x = multiply(x, g);
  return x;
}

struct Triple {
  std::uint32_t p, n;
  std::size_t k;
};

/// Every (p, n, k) whose semidirect product has at most 3^7 elements.
std::vector<Triple> small_triples() {
  std::vector<Triple> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      const GroupContext ctx(p, n);
      for (std::size_t k = 0; k <= 6; ++k) {
        const std::uint64_t digits = k * ctx.order() + n;
        if (digits > 20 || oracle::ipow(p, static_cast<std::uint32_t>(digits)) > 2187) break;
        out.push_back({p, n, k});
      }
    }
  }
  return out;
}

/// Stable hyperplanes of F_p[G]^k counted through member sets: a hyperplane
/// is stable iff sigma maps each of its vectors back into it.
std::uint64_t stable_hyperplanes_by_sets(const GroupContext& ctx, std::size_t k) {
  const FpGModule m = FpGModule::free(ctx, k);
  const std::uint32_t p = ctx.p();
  const std::size_t d = m.dim();
  const std::uint64_t total = oracle::ipow(p, static_cast<std::uint32_t>(d));
  auto vec = [&](std::uint64_t code) {
    VectorFp v(d);
    for (auto& x : v) {
      x = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
    return v;
  };
  std::set<std::set<VectorFp>> found;
  for (std::uint64_t code = 1; code < total; ++code) {
    const VectorFp phi = vec(code);
    std::set<VectorFp> h;
    for (std::uint64_t c = 0; c < total; ++c) {
      const VectorFp v = vec(c);
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < d; ++i) s += std::uint64_t{phi[i]} * v[i];
      if (s % p == 0) h.insert(v);
    }
    bool stable = true;
    for (const auto& v : h) stable = stable && h.count(m.act(v)) > 0;
    if (stable) found.insert(std::move(h));
  }
  return found.size();
}

}  // namespace

TEST_CASE("squaring (1, sigma) over Z/4") {
  const GroupContext ctx(2, 2);
  const SemidirectElement g{ctx, {GroupAlgebraElement::one(ctx)}, 1};
  const SemidirectElement sq = multiply(g, g);
  CHECK(sq.j == 2);
  CHECK(sq.m[0] == GroupAlgebraElement::one(ctx) + GroupAlgebraElement::sigma_power(ctx, 1));
  CHECK(power(g, 2) == sq);
  // fourth power is ((sigma - 1)^3, 0), not the identity
  const auto s = GroupAlgebraElement::sigma_power(ctx, 1) - GroupAlgebraElement::one(ctx);
  CHECK(power(g, 4) == SemidirectElement{ctx, {s.pow(3)}, 0});
  CHECK(element_order(g) == 8);
}

TEST_CASE("inverses, powers and Lagrange on random elements") {
  std::mt19937_64 rng(3);
  for (const auto& [p, n, k] : std::vector<Triple>{{2, 1, 2}, {2, 2, 1}, {3, 1, 2}, {2, 3, 1}, {5, 1, 1}}) {
    const GroupContext ctx(p, n);
    const auto id = semidirect_identity(ctx, k);
    for (int t = 0; t < 40; ++t) {
      const auto g = random_element(ctx, k, rng);
      CHECK(multiply(g, inverse(g)) == id);
      CHECK(multiply(inverse(g), g) == id);
      const std::int64_t e = static_cast<std::int64_t>(rng() % 30);
      CHECK(power(g, e) == repeated_product(g, e));
      CHECK(power(g, -e) == repeated_product(inverse(g), e));
      CHECK(power(g, ctx.order() * static_cast<std::int64_t>(p)) == id);
    }
  }
}

TEST_CASE("element index is a bijection") {
  for (const auto& [p, n, k] : std::vector<Triple>{{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 1, 2}, {3, 1, 0}}) {
    const GroupContext ctx(p, n);
    const std::uint64_t order = semidirect_order(ctx, k);
    CHECK(order == oracle::ipow(p, static_cast<std::uint32_t>(k * ctx.order() + n)));
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint64_t i = 0; i < order; ++i) {
      const auto g = element_from_index(ctx, k, i);
      CHECK(element_index(g) == i);
      std::vector<std::uint32_t> key{g.j};
      for (const auto& x : g.m) key.insert(key.end(), x.coeffs().begin(), x.coeffs().end());
      seen.insert(key);
    }
    CHECK(seen.size() == order);
  }
  CHECK_THROWS_AS(element_from_index(GroupContext(2, 1), 1, 8), Error);
  CHECK_THROWS_AS(multiply(semidirect_identity(GroupContext(2, 1), 1), semidirect_identity(GroupContext(3, 1), 1)),
                  Error);
}

TEST_CASE("order of a power") {
  for (const auto& [p, n, k] : std::vector<Triple>{{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 1, 2}}) {
    const GroupContext ctx(p, n);
    const std::uint64_t order = semidirect_order(ctx, k);
    for (std::uint64_t i = 0; i < order; ++i) {
      const auto g = element_from_index(ctx, k, i);
      const std::uint64_t og = element_order(g);
      for (std::uint64_t e = 0; e <= 2 * og; ++e) {
        CHECK(element_order(power(g, static_cast<std::int64_t>(e))) == og / std::gcd(og, e));
      }
    }
  }
}

TEST_CASE("group axioms") {
  for (const auto& [p, n, k] : std::vector<Triple>{{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 1, 0}}) {
    const auto r = group_axioms_check(GroupContext(p, n), k);
    CHECK(r.passed);
    CHECK_FALSE(r.sampled);
  }
  const auto big = group_axioms_check(GroupContext(2, 2), 2);
  CHECK(big.passed);
  CHECK(big.sampled);
}

TEST_CASE("p^n-th powers follow the norm formula on all small groups") {
  for (const auto& [p, n, k] : small_triples()) {
    CAPTURE(p);
    CAPTURE(n);
    CAPTURE(k);
    const GroupContext ctx(p, n);
    const auto r = pn_power_formula_check(ctx, k);
    CHECK(r.passed);
    CHECK_FALSE(r.sampled);
    CHECK(r.checked == semidirect_order(ctx, k));
  }
  // independent of the engine's power(): repeated products against the
  // geometric norm 1 + sigma^j + ... + sigma^(j(p^n - 1))
  for (const auto& [p, n, k] : std::vector<Triple>{{2, 2, 1}, {3, 1, 1}}) {
    const GroupContext ctx(p, n);
    for (std::uint64_t i = 0; i < semidirect_order(ctx, k); ++i) {
      const auto g = element_from_index(ctx, k, i);
      const auto pw = repeated_product(g, ctx.order());
      CHECK(pw.j == 0);
      CHECK(pw.m[0] == norm_element(ctx, g.j) * g.m[0]);
      if (g.j == 0) CHECK(pw == semidirect_identity(ctx, k));
    }
  }
  CHECK(pn_power_formula_check(GroupContext(2, 2), 2).checked == 1024);
}

TEST_CASE("exponent") {
  CHECK(exponent(GroupContext(2, 2), 1) == 8);
  CHECK(exponent(GroupContext(3, 1), 2) == 9);
  CHECK(exponent(GroupContext(3, 1), 1) == 9);
  CHECK(exponent(GroupContext(2, 2), 2) == 8);
  CHECK(exponent(GroupContext(2, 2), 0) == 4);
  CHECK(exponent(GroupContext(5, 1), 0) == 5);
  CHECK(exponent_check(GroupContext(2, 1), 3).passed);
  CHECK_THROWS_AS(exponent(GroupContext(2, 2), 2, 1000), Error);
  // the element (1, 0, sigma) alone already has order 9
  const GroupContext c3(3, 1);
  CHECK(element_order(SemidirectElement{c3, {GroupAlgebraElement::one(c3), GroupAlgebraElement(c3)}, 1}) == 9);
}

TEST_CASE("stable hyperplanes contain the augmentation image") {
  for (const auto& [p, n, k] : std::vector<Triple>{{2, 2, 1}, {3, 1, 1}, {2, 2, 2}, {3, 1, 2}, {2, 1, 3}, {5, 1, 1}}) {
    CAPTURE(p);
    CAPTURE(n);
    CAPTURE(k);
    const GroupContext ctx(p, n);
    const auto r = index_p_submodules_contain_augmentation_image(ctx, k);
    CHECK(r.passed);
    const std::uint64_t stable = r.details["stable_hyperplanes"];
    CHECK(stable == stable_hyperplanes_by_sets(ctx, k));
    CHECK(r.details["hyperplanes"].get<std::uint64_t>() > stable);
    CHECK(r.details["containing_image"] == stable);
  }
  // F_p[G] is local: one maximal submodule for k = 1
  CHECK(index_p_submodules_contain_augmentation_image(GroupContext(2, 2), 1).details["stable_hyperplanes"] == 1);
  CHECK(index_p_submodules_contain_augmentation_image(GroupContext(2, 2), 2).details["stable_hyperplanes"] == 3);
  CHECK(index_p_submodules_contain_augmentation_image(GroupContext(3, 1), 2).details["stable_hyperplanes"] == 4);
  VerifyOptions tight;
  tight.cutoff = 100;
  CHECK_THROWS_AS(index_p_submodules_contain_augmentation_image(GroupContext(2, 2), 2, tight), Error);
}

TEST_CASE("fiber product isomorphism") {
  const auto r22 = fiber_product_isomorphism(GroupContext(2, 2), 2);
  CHECK(r22.passed);
  CHECK_FALSE(r22.sampled);
  CHECK(r22.details["pairs_checked"] == 1u << 20);

  const auto r31 = fiber_product_isomorphism(GroupContext(3, 1), 2);
  CHECK(r31.passed);
  CHECK(r31.sampled);
  CHECK(r31.seed == kDefaultSeed);
  CHECK(to_json(r31) == to_json(fiber_product_isomorphism(GroupContext(3, 1), 2)));

  CHECK(fiber_product_isomorphism(GroupContext(5, 1), 1).passed);
  try {
    fiber_product_isomorphism(GroupContext(2, 2), 0);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
  VerifyOptions tight;
  tight.cutoff = 1000;
  CHECK_THROWS_AS(fiber_product_isomorphism(GroupContext(2, 2), 2, tight), Error);
}

TEST_CASE("extension class counts") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const GroupContext ctx(p, 1);
    CHECK(h2_witness_extension_count(FpGModule::regular(ctx)) == 1);
    CHECK(h2_witness_extension_count(FpGModule::free(ctx, 2)) == 1);
    CHECK(h2_witness_extension_count(FpGModule::trivial(ctx, 1)) == p);
    CHECK(h2_witness_extension_count(FpGModule::trivial(ctx, 0)) == 1);
  }
}

TEST_CASE("check report JSON") {
  const auto j = to_json(pn_power_formula_check(GroupContext(2, 2), 1));
  CHECK(j["check"] == "pn_power_formula");
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["result"] == true);
  CHECK(j["seed"] == kDefaultSeed);
  CHECK_FALSE(j.contains("counterexample"));
}
