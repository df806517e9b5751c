#include "galmod/as/window.hpp"

#include <algorithm>

#include "galmod/algebra/poly.hpp"
#include "galmod/error.hpp"

namespace galmod {

namespace {

// Pole (alpha, i) and degree d share one ordered code space; poles first.
constexpr std::uint64_t kPolySlot = std::uint64_t{1} << 62;

std::uint64_t pole_code(const PoleKey& k) { return (k.alpha << 32) | k.order; }

/// Defining polynomial of F_q in the generator g, e.g. "g^4 + g + 1".
std::string modulus_string(const ExtField& F) {
  std::vector<ExtFieldElement> c;
  for (auto x : F.modulus()) c.push_back(F.from_int(x));
  std::string s = Poly(F, std::move(c)).to_string();
  std::replace(s.begin(), s.end(), 't', 'g');
  return s;
}

}  // namespace

ASWindow::ASWindow(const ASContext& ctx, std::vector<ASNormalForm> basis, std::vector<std::uint64_t> slots,
                   bool constant_slot, MatrixFp basis_slots, FpGModule module)
    : ctx_(ctx),
      basis_(std::move(basis)),
      slots_(std::move(slots)),
      constant_slot_(constant_slot),
      basis_slots_(std::move(basis_slots)),
      module_(std::move(module)) {}

std::optional<VectorFp> ASWindow::slot_vector(const ASNormalForm& nf) const {
  const std::size_t m = ctx_.field().degree();
  VectorFp v(slots_.size() * m + (constant_slot_ ? 1 : 0), 0);
  auto place = [&](std::uint64_t code, const ExtFieldElement& c) {
    auto it = std::lower_bound(slots_.begin(), slots_.end(), code);
    if (it == slots_.end() || *it != code) return false;
    std::copy(c.coeffs().begin(), c.coeffs().end(), v.begin() + (it - slots_.begin()) * m);
    return true;
  };
  for (const auto& [k, c] : nf.poles) {
    if (!place(pole_code(k), c)) return std::nullopt;
  }
  for (const auto& [d, a] : nf.poly) {
    if (!place(kPolySlot | d, a)) return std::nullopt;
  }
  if (nf.constant != 0) {
    if (!constant_slot_) return std::nullopt;
    v.back() = nf.constant;
  }
  return v;
}

std::optional<VectorFp> ASWindow::try_coordinates_of(const ASNormalForm& nf) const {
  const auto s = slot_vector(nf);
  if (!s) return std::nullopt;
  return basis_slots_.solve(*s);
}

VectorFp ASWindow::coordinates_of(const ASNormalForm& nf) const {
  auto c = try_coordinates_of(nf);
  if (!c) throw Error(ErrorKind::OutOfRange, "class " + to_string(nf, ctx_) + " is not in the window");
  return *c;
}

ASNormalForm ASWindow::normal_form(const VectorFp& v) const {
  if (v.size() != basis_.size()) throw Error(ErrorKind::DimensionMismatch, "window vector has the wrong length");
  ASNormalForm out;
  for (std::size_t i = 0; i < v.size(); ++i) out = add(out, scale(basis_[i], v[i], ctx_), ctx_);
  return out;
}

ASWindow orbit_module(const std::vector<ASNormalForm>& gens, const ASContext& ctx) {
  const std::uint32_t p = ctx.p();
  const std::uint32_t N = ctx.group().order();
  std::vector<std::vector<ASNormalForm>> orbits;
  std::vector<std::uint64_t> slots;
  bool constant_slot = false;
  for (const auto& g : gens) {
    std::vector<ASNormalForm> orbit{g};
    for (std::uint32_t j = 1; j < N; ++j) orbit.push_back(act_sigma(orbit.back(), ctx));
    for (const auto& x : orbit) {
      for (const auto& [k, c] : x.poles) slots.push_back(pole_code(k));
      for (const auto& [d, a] : x.poly) slots.push_back(kPolySlot | d);
      constant_slot = constant_slot || x.constant != 0;
    }
    orbits.push_back(std::move(orbit));
  }
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());

  // Probe window with no basis yet, only to map normal forms to slot vectors.
  const std::size_t slot_dim = slots.size() * ctx.field().degree() + (constant_slot ? 1 : 0);
  ASWindow probe(ctx, {}, slots, constant_slot, MatrixFp(slot_dim, 0, p), FpGModule::trivial(ctx.group(), 0));

  std::vector<ASNormalForm> basis;
  std::vector<VectorFp> rows;
  std::size_t rank = 0;
  for (const auto& orbit : orbits) {
    for (const auto& x : orbit) {
      rows.push_back(*probe.slot_vector(x));
      if (MatrixFp::from_rows(rows, slot_dim, p).rank() > rank) {
        ++rank;
        basis.push_back(x);
      } else {
        rows.pop_back();
      }
    }
  }
  const MatrixFp basis_slots = MatrixFp::from_rows(rows, slot_dim, p).transpose();
  probe.basis_slots_ = basis_slots;

  MatrixFp sigma(basis.size(), basis.size(), p);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto col = basis_slots.solve(*probe.slot_vector(act_sigma(basis[j], ctx)));
    if (!col) throw Error(ErrorKind::InvariantViolation, "orbit span is not sigma-stable");
    for (std::size_t i = 0; i < basis.size(); ++i) sigma.set(i, j, (*col)[i]);
  }
  return ASWindow(ctx, std::move(basis), std::move(slots), constant_slot, basis_slots,
                  FpGModule(ctx.group(), std::move(sigma)));
}

Witness find_witness(const ASContext& ctx, std::size_t k, const std::optional<RatFn>& delta) {
  const ExtField& F = ctx.field();
  const std::uint32_t N = ctx.group().order();
  std::vector<ExtFieldElement> alphas;
  for (std::uint64_t i = 0; i < F.size() && alphas.size() < k; ++i) {
    const ExtFieldElement a = F.from_index(i);
    if (a.orbit_size() != N) continue;
    bool smallest = true;
    for (ExtFieldElement x = a.frobenius(); !(x == a); x = x.frobenius()) smallest = smallest && a.index() < x.index();
    if (smallest) alphas.push_back(a);
  }
  if (alphas.size() < k) {
    throw Error(ErrorKind::NotEnoughOrbits, "F_" + std::to_string(F.size()) + " has only " +
                                                std::to_string(alphas.size()) + " Frobenius orbits of size " +
                                                std::to_string(N) + ", need " + std::to_string(k));
  }
  std::vector<ASNormalForm> gens;
  for (const auto& a : alphas) {
    ASNormalForm g;
    g.poles.emplace(PoleKey{a.index(), 1}, F.one());
    gens.push_back(std::move(g));
  }
  const ASNormalForm d = reduce(delta ? *delta : RatFn::t(F), ctx).normal_form;
  std::vector<ASNormalForm> window_gens = gens;
  window_gens.push_back(d);
  ASWindow window = orbit_module(window_gens, ctx);

  FamilyInput input{window.module(), {}, window.coordinates_of(d)};
  for (const auto& g : gens) input.generators.push_back(window.coordinates_of(g));
  validate(input);
  return {std::move(window), std::move(input), std::move(alphas), d};
}

Realization realize(const ASContext& ctx, std::size_t k, const std::optional<RatFn>& delta) {
  const GroupContext& g = ctx.group();
  if (g.p() == 2 && g.n() == 1) {
    throw Error(ErrorKind::HypothesisViolation, "the lower bound is stated for n >= 2 when p = 2");
  }
  Witness w = find_witness(ctx, k, delta);
  FamilyOutput family = build_family(w.input);
  std::vector<DefiningSet> sets;
  const std::string lhs = "x^" + std::to_string(ctx.p()) + " - x - (";
  for (const auto& m : family.members) {
    DefiningSet s{m.c, {}, {}, m.submodule};
    for (const auto& v : m.generators) {
      const std::string gamma = to_string(w.window.normal_form(v), ctx);
      s.generators.push_back(gamma);
      s.polynomials.push_back(lhs + gamma + ")");
    }
    sets.push_back(std::move(s));
  }
  return {std::move(w), std::move(family), std::move(sets)};
}

nlohmann::json to_json(const Realization& r, const ASContext& ctx) {
  const ExtField& F = ctx.field();
  nlohmann::json alphas = nlohmann::json::array();
  for (const auto& a : r.witness.alphas) alphas.push_back(a.to_string());
  nlohmann::json family = nlohmann::json::array();
  for (const auto& s : r.sets) {
    family.push_back({{"c", s.c}, {"generators", s.generators}, {"polynomials", s.polynomials}});
  }
  const auto& g = ctx.group();
  return {{"p", g.p()},
          {"n", g.n()},
          {"k", r.witness.input.rank()},
          {"field", {{"q", F.size()}, {"modulus", modulus_string(F)}, {"generator", "g"},
                     {"theta", ctx.theta().to_string()}}},
          {"alphas", std::move(alphas)},
          {"delta", to_string(r.witness.delta, ctx)},
          {"family", std::move(family)}};
}

}  // namespace galmod
