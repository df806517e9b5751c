#include "galmod/group/checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "galmod/error.hpp"

namespace galmod {

namespace {

CheckReport make_report(std::string name, const GroupContext& ctx, std::size_t k, const VerifyOptions& opts) {
  CheckReport r;
  r.check = std::move(name);
  r.p = ctx.p();
  r.n = ctx.n();
  r.k = k;
  r.seed = opts.seed;
  return r;
}

std::uint64_t bounded_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

void fail(CheckReport& r, nlohmann::json counterexample) {
  if (r.passed) {
    r.passed = false;
    r.counterexample = std::move(counterexample);
  }
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j = {{"check", r.check}, {"p", r.p},           {"n", r.n},
                      {"k", r.k},         {"mode", r.sampled ? "sampled" : "exhaustive"},
                      {"seed", r.seed},   {"checked", r.checked}, {"result", r.result},
                      {"passed", r.passed}, {"details", r.details}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

CheckReport group_axioms_check(const GroupContext& ctx, std::size_t k, const VerifyOptions& opts) {
  CheckReport r = make_report("group_axioms", ctx, k, opts);
  r.passed = true;
  const std::uint64_t order = semidirect_order(ctx, k);
  const SemidirectElement id = semidirect_identity(ctx, k);
  std::mt19937_64 rng(opts.seed);

  const bool sample_elements = order > opts.cutoff;
  const std::uint64_t singles = sample_elements ? opts.samples : order;
  for (std::uint64_t t = 0; t < singles && r.passed; ++t) {
    const auto g = element_from_index(ctx, k, sample_elements ? rng() % order : t);
    if (!(multiply(g, id) == g) || !(multiply(id, g) == g) || !(multiply(g, inverse(g)) == id) ||
        !(multiply(inverse(g), g) == id)) {
      fail(r, {{"g", to_json(g)}});
    }
  }

  const std::uint64_t cube = bounded_mul(bounded_mul(order, order), order);
  r.sampled = sample_elements || cube > opts.cutoff;
  const std::uint64_t triples = r.sampled ? opts.samples : cube;
  for (std::uint64_t t = 0; t < triples && r.passed; ++t) {
    std::uint64_t a, b, c;
    if (r.sampled) {
      a = rng() % order;
      b = rng() % order;
      c = rng() % order;
    } else {
      a = t % order;
      b = (t / order) % order;
      c = t / order / order;
    }
    const auto ga = element_from_index(ctx, k, a), gb = element_from_index(ctx, k, b),
               gc = element_from_index(ctx, k, c);
    if (!(multiply(multiply(ga, gb), gc) == multiply(ga, multiply(gb, gc)))) {
      fail(r, {{"a", to_json(ga)}, {"b", to_json(gb)}, {"c", to_json(gc)}});
    }
  }
  r.checked = singles + triples;
  r.result = r.passed;
  r.details = {{"group_order", order}, {"triples", triples}};
  return r;
}

CheckReport pn_power_formula_check(const GroupContext& ctx, std::size_t k, const VerifyOptions& opts) {
  CheckReport r = make_report("pn_power_formula", ctx, k, opts);
  r.passed = true;
  const std::uint64_t order = semidirect_order(ctx, k);
  const std::uint32_t N = ctx.order();
  // closed-form norm (sigma^j - 1)^(p^n - 1) for each j
  std::vector<GroupAlgebraElement> norms;
  for (std::uint32_t j = 0; j < N; ++j) {
    norms.push_back((GroupAlgebraElement::sigma_power(ctx, j) - GroupAlgebraElement::one(ctx)).pow(N - 1));
  }
  r.sampled = order > opts.cutoff;
  const std::uint64_t count = r.sampled ? opts.samples : order;
  std::mt19937_64 rng(opts.seed);
  std::uint64_t nontrivial = 0;
  for (std::uint64_t t = 0; t < count && r.passed; ++t) {
    const auto g = element_from_index(ctx, k, r.sampled ? rng() % order : t);
    const auto generic = power(g, N);
    SemidirectElement closed{ctx, {}, 0};
    bool in_image = true;
    for (const auto& x : g.m) {
      closed.m.push_back(norms[g.j] * x);
      in_image = in_image && closed.m.back().augmentation() == 0;
    }
    if (!(generic == closed) || !in_image) {
      fail(r, {{"g", to_json(g)}, {"power", to_json(generic)}, {"closed_form", to_json(closed)}});
    }
    if (!(generic == semidirect_identity(ctx, k))) ++nontrivial;
  }
  r.checked = count;
  r.result = r.passed;
  r.details = {{"group_order", order}, {"nontrivial_powers", nontrivial}};
  return r;
}

std::uint64_t exponent(const GroupContext& ctx, std::size_t k, std::uint64_t max_elements) {
  const std::uint64_t order = semidirect_order(ctx, k);
  if (order > max_elements) {
    throw Error(ErrorKind::TooLarge, "group of order " + std::to_string(order) + " exceeds the enumeration bound " +
                                         std::to_string(max_elements));
  }
  std::uint64_t e = 1;
  for (std::uint64_t t = 0; t < order; ++t) e = std::lcm(e, element_order(element_from_index(ctx, k, t)));
  return e;
}

CheckReport exponent_check(const GroupContext& ctx, std::size_t k, const VerifyOptions& opts) {
  CheckReport r = make_report("exponent", ctx, k, opts);
  const std::uint64_t e = exponent(ctx, k, opts.cutoff);
  const std::uint64_t expected = k == 0 ? ctx.order() : std::uint64_t{ctx.order()} * ctx.p();
  r.checked = semidirect_order(ctx, k);
  r.result = e;
  r.passed = e == expected;
  r.details = {{"expected", expected}};
  return r;
}

CheckReport index_p_submodules_contain_augmentation_image(const GroupContext& ctx, std::size_t k,
                                                          const VerifyOptions& opts) {
  CheckReport r = make_report("index_p_submodules_contain_augmentation_image", ctx, k, opts);
  r.passed = true;
  const FpGModule m = FpGModule::free(ctx, k);
  const std::uint32_t p = ctx.p();
  const std::size_t d = m.dim();
  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < d; ++i) {
    vectors = bounded_mul(vectors, p);
    if (vectors > bounded_mul(opts.cutoff, p)) {
      throw Error(ErrorKind::TooLarge, "more than " + std::to_string(opts.cutoff) + " hyperplanes in F_" +
                                           std::to_string(p) + "^" + std::to_string(d));
    }
  }
  const MatrixFp& s = m.sigma();
  const MatrixFp image = image_power(m, 1).basis();
  auto dot = [&](const VectorFp& phi, const std::span<const std::uint32_t> v) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < d; ++i) acc += std::uint64_t{phi[i]} * v[i];
    return static_cast<std::uint32_t>(acc % p);
  };
  std::uint64_t functionals = 0, stable = 0, containing = 0;
  VectorFp phi(d, 0);
  for (std::uint64_t code = 1; code < vectors; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      phi[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    std::size_t lead = 0;
    while (phi[lead] == 0) ++lead;
    if (phi[lead] != 1) continue;  // one functional per hyperplane
    ++functionals;
    // phi sigma as a row vector; ker phi is stable iff phi sigma = lambda phi
    VectorFp psi(d, 0);
    for (std::size_t jcol = 0; jcol < d; ++jcol) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < d; ++i) acc += std::uint64_t{phi[i]} * s(i, jcol);
      psi[jcol] = static_cast<std::uint32_t>(acc % p);
    }
    if (psi != scale_vector(phi, psi[lead], p)) continue;
    ++stable;
    const bool kills_image = psi == phi;  // phi (sigma - 1) = 0
    bool contains = true;
    for (std::size_t row = 0; row < image.rows() && contains; ++row) contains = dot(phi, image.row(row)) == 0;
    if (contains) ++containing;
    if (!contains || kills_image != contains) fail(r, {{"functional", phi}});
  }
  r.checked = functionals;
  r.result = r.passed;
  r.details = {{"hyperplanes", functionals}, {"stable_hyperplanes", stable}, {"containing_image", containing},
               {"image_dim", image.rows()}};
  return r;
}

CheckReport fiber_product_isomorphism(const GroupContext& ctx, std::size_t k, const VerifyOptions& opts) {
  if (k == 0) throw Error(ErrorKind::OutOfRange, "the fiber product needs k >= 1 factors");
  CheckReport r = make_report("fiber_product_isomorphism", ctx, k, opts);
  r.passed = true;
  const std::uint64_t order = semidirect_order(ctx, k);
  if (order > opts.cutoff) {
    throw Error(ErrorKind::TooLarge, "domain of order " + std::to_string(order) + " exceeds the enumeration bound " +
                                         std::to_string(opts.cutoff));
  }
  auto diag = [&](const SemidirectElement& g) {
    std::vector<SemidirectElement> out;
    for (const auto& x : g.m) out.push_back({ctx, {x}, g.j});
    return out;
  };
  auto tuple_json = [](const std::vector<SemidirectElement>& t) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : t) j.push_back(to_json(x));
    return j;
  };
  // Fiber elements are indexed like the domain: k F_p[G]-blocks, then the common j.
  const std::uint64_t block = semidirect_order(ctx, 1) / ctx.order();
  auto fiber_index = [&](const std::vector<SemidirectElement>& t) -> std::optional<std::uint64_t> {
    std::uint64_t index = t.front().j;
    for (std::size_t i = t.size(); i-- > 0;) {
      if (t[i].j != t.front().j) return std::nullopt;
      index = index * block + element_index(t[i]) % block;
    }
    return index;
  };

  std::vector<bool> hit(order, false);
  bool injective = true, into_fiber = true;
  for (std::uint64_t t = 0; t < order; ++t) {
    const auto image = diag(element_from_index(ctx, k, t));
    const auto idx = fiber_index(image);
    if (!idx) {
      into_fiber = false;
      fail(r, {{"outside_fiber", tuple_json(image)}});
      continue;
    }
    if (hit[*idx]) {
      injective = false;
      fail(r, {{"collision", tuple_json(image)}});
    }
    hit[*idx] = true;
  }
  bool surjective = true;
  for (std::uint64_t t = 0; t < order && surjective; ++t) {
    if (!hit[t]) surjective = false;
  }
  if (!surjective) fail(r, {{"missed_fiber_index", std::find(hit.begin(), hit.end(), false) - hit.begin()}});

  const std::uint64_t pairs = bounded_mul(order, order);
  r.sampled = pairs > opts.cutoff;
  const std::uint64_t count = r.sampled ? opts.samples : pairs;
  std::mt19937_64 rng(opts.seed);
  bool homomorphism = true;
  for (std::uint64_t t = 0; t < count && homomorphism; ++t) {
    const std::uint64_t a = r.sampled ? rng() % order : t % order;
    const std::uint64_t b = r.sampled ? rng() % order : t / order;
    const auto ga = element_from_index(ctx, k, a), gb = element_from_index(ctx, k, b);
    const auto lhs = diag(multiply(ga, gb));
    const auto da = diag(ga), db = diag(gb);
    for (std::size_t i = 0; i < k && homomorphism; ++i) homomorphism = lhs[i] == multiply(da[i], db[i]);
    if (!homomorphism) fail(r, {{"a", to_json(ga)}, {"b", to_json(gb)}});
  }
  r.checked = order + count;
  r.result = r.passed;
  r.details = {{"domain_order", order},       {"pairs_checked", count}, {"homomorphism", homomorphism},
               {"injective", injective},      {"surjective", surjective}, {"image_in_fiber", into_fiber}};
  return r;
}

std::uint64_t h2_witness_extension_count(const FpGModule& m) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < cyclic_h2(m); ++i) r = bounded_mul(r, m.p());
  return r;
}

}  // namespace galmod
