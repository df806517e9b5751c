#include "galmod/as/normal_form.hpp"

#include "galmod/algebra/partial_fractions.hpp"
#include "galmod/error.hpp"

namespace galmod {

namespace {

std::uint32_t field_degree(const GroupContext& g, std::uint64_t max_q) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    q *= g.p();
    if (q > max_q) {
      throw Error(ErrorKind::TooLarge, "q = " + std::to_string(g.p()) + "^" + std::to_string(g.order()) +
                                           " exceeds the bound " + std::to_string(max_q));
    }
  }
  return g.order();
}

ExtFieldElement smallest_trace_one(const ExtField& f) {
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const auto x = f.from_index(i);
    if (x.trace().value() == 1) return x;
  }
  throw Error(ErrorKind::InvariantViolation, "no element of trace 1");
}

RatFn inverse_power_of_linear(const ExtFieldElement& alpha, std::uint32_t order) {
  return RatFn(Poly::constant(alpha.field().one()), Poly::linear(alpha).pow(order));
}

void put(std::map<PoleKey, ExtFieldElement>& m, const PoleKey& k, const ExtFieldElement& c) {
  if (c.is_zero()) {
    m.erase(k);
  } else {
    m.insert_or_assign(k, c);
  }
}

void put(std::map<std::uint32_t, ExtFieldElement>& m, std::uint32_t k, const ExtFieldElement& c) {
  if (c.is_zero()) {
    m.erase(k);
  } else {
    m.insert_or_assign(k, c);
  }
}

}  // namespace

ASContext::ASContext(std::uint32_t p, std::uint32_t n, std::uint64_t max_q)
    : group_(p, n),
      field_(ExtField::make(p, field_degree(group_, max_q))),
      theta_(smallest_trace_one(field_)),
      wp_matrix_(field_.frobenius_matrix() - MatrixFp::identity(field_.degree(), p)) {}

std::optional<ExtFieldElement> ASContext::wp_preimage(const ExtFieldElement& c) const {
  const auto y = wp_matrix_.solve(c.coeffs());
  if (!y) return std::nullopt;
  return field_.from_coeffs(*y);
}

RatFn wp(const RatFn& f) { return f.pow(f.field().characteristic()) - f; }

Reduction reduce(const RatFn& f, const ASContext& ctx) {
  if (!(f.field() == ctx.field())) throw Error(ErrorKind::ContextMismatch, "function over a different field");
  const std::uint32_t p = ctx.p();
  const ExtField& F = ctx.field();
  const PartialFractions pf = partial_fractions(f);
  Reduction out{{}, RatFn(F)};
  RatFn& g = out.certificate;

  // c / (t - a)^(p j) = b / (t - a)^j + wp(b / (t - a)^j) with b = c^(1/p);
  // walking orders downward lets the moved coefficient be reduced again.
  for (const auto& pole : pf.poles) {
    std::vector<ExtFieldElement> c = pole.coeffs;
    for (std::size_t i = c.size(); i >= 1; --i) {
      if (c[i - 1].is_zero()) continue;
      if (i % p == 0) {
        const std::size_t j = i / p;
        const ExtFieldElement b = c[i - 1].pth_root();
        c[j - 1] += b;
        g = g + RatFn::constant(b) * inverse_power_of_linear(pole.alpha, static_cast<std::uint32_t>(j));
      } else {
        out.normal_form.poles.emplace(PoleKey{pole.alpha.index(), static_cast<std::uint32_t>(i)}, c[i - 1]);
      }
    }
  }

  std::vector<ExtFieldElement> a = pf.polynomial_part.coeffs();
  for (std::size_t d = a.size(); d-- > 1;) {
    if (a[d].is_zero()) continue;
    if (d % p == 0) {
      const ExtFieldElement b = a[d].pth_root();
      a[d / p] += b;
      g = g + RatFn(Poly::monomial(b, d / p));
    } else {
      out.normal_form.poly.emplace(static_cast<std::uint32_t>(d), a[d]);
    }
  }

  if (!a.empty()) {
    const std::uint32_t s = a[0].trace().value();
    const auto y = ctx.wp_preimage(a[0] - ctx.theta().scaled(s));
    if (!y) throw Error(ErrorKind::InvariantViolation, "trace-zero constant without a wp preimage");
    out.normal_form.constant = s;
    g = g + RatFn::constant(*y);
  }
  return out;
}

RatFn embed(const ASNormalForm& nf, const ASContext& ctx) {
  const ExtField& F = ctx.field();
  RatFn out = RatFn::constant(ctx.theta().scaled(nf.constant));
  std::vector<ExtFieldElement> poly(1, F.zero());
  for (const auto& [d, a] : nf.poly) {
    if (poly.size() <= d) poly.resize(d + 1, F.zero());
    poly[d] = a;
  }
  out = out + RatFn(Poly(F, std::move(poly)));
  for (const auto& [key, c] : nf.poles) {
    out = out + RatFn::constant(c) * inverse_power_of_linear(F.from_index(key.alpha), key.order);
  }
  return out;
}

ASNormalForm add(const ASNormalForm& a, const ASNormalForm& b, const ASContext& ctx) {
  ASNormalForm out = a;
  for (const auto& [k, c] : b.poles) {
    auto it = out.poles.find(k);
    put(out.poles, k, it == out.poles.end() ? c : it->second + c);
  }
  for (const auto& [k, c] : b.poly) {
    auto it = out.poly.find(k);
    put(out.poly, k, it == out.poly.end() ? c : it->second + c);
  }
  out.constant = (a.constant + b.constant) % ctx.p();
  return out;
}

ASNormalForm scale(const ASNormalForm& a, std::uint32_t c, const ASContext& ctx) {
  c %= ctx.p();
  ASNormalForm out;
  if (c == 0) return out;
  for (const auto& [k, x] : a.poles) out.poles.emplace(k, x.scaled(c));
  for (const auto& [k, x] : a.poly) out.poly.emplace(k, x.scaled(c));
  out.constant = (a.constant * c) % ctx.p();
  return out;
}

ASNormalForm act_sigma(const ASNormalForm& nf, const ASContext& ctx) {
  const ExtField& F = ctx.field();
  ASNormalForm out;
  for (const auto& [k, c] : nf.poles) {
    out.poles.emplace(PoleKey{F.from_index(k.alpha).frobenius().index(), k.order}, c.frobenius());
  }
  for (const auto& [d, a] : nf.poly) out.poly.emplace(d, a.frobenius());
  // (c theta)^p = c theta^p has trace c, so the class is unchanged; computed
  // rather than assumed
  out.constant = ctx.theta().scaled(nf.constant).frobenius().trace().value();
  return out;
}

std::string to_string(const ASNormalForm& nf, const ASContext& ctx) { return embed(nf, ctx).to_string(); }

nlohmann::json to_json(const ASNormalForm& nf, const ASContext& ctx) {
  const ExtField& F = ctx.field();
  nlohmann::json poles = nlohmann::json::array();
  for (const auto& [k, c] : nf.poles) {
    poles.push_back({{"alpha", F.from_index(k.alpha).to_string()}, {"order", k.order}, {"coeff", c.to_string()}});
  }
  nlohmann::json poly = nlohmann::json::array();
  for (const auto& [d, a] : nf.poly) poly.push_back({{"degree", d}, {"coeff", a.to_string()}});
  return {{"poles", std::move(poles)}, {"poly", std::move(poly)}, {"constant", nf.constant},
          {"function", embed(nf, ctx).to_string()}};
}

}  // namespace galmod
