#include "galmod/algebra/partial_fractions.hpp"

#include "galmod/error.hpp"

namespace galmod {

RatFn PartialFractions::recombine() const {
  RatFn acc(polynomial_part);
  for (const auto& pole : poles) {
    const Poly lin = Poly::linear(pole.alpha);
    for (std::size_t i = 0; i < pole.coeffs.size(); ++i) {
      if (pole.coeffs[i].is_zero()) continue;
      acc = acc + RatFn(Poly::constant(pole.coeffs[i]), lin.pow(i + 1));
    }
  }
  return acc;
}

std::vector<std::pair<ExtFieldElement, unsigned>> linear_factors(const Poly& f, Poly* remainder,
                                                                  std::uint64_t max_field_size) {
  if (f.is_zero()) throw Error(ErrorKind::OutOfRange, "roots of the zero polynomial");
  const ExtField& field = f.field();
  if (field.size() > max_field_size) {
    throw Error(ErrorKind::TooLarge, "root search over F_" + std::to_string(field.size()));
  }
  std::vector<std::pair<ExtFieldElement, unsigned>> out;
  Poly rest = f;
  for (std::uint64_t i = 0; i < field.size() && rest.degree() > 0; ++i) {
    const ExtFieldElement x = field.from_index(i);
    unsigned mult = 0;
    while (rest.degree() > 0 && rest.eval(x).is_zero()) {
      rest = rest.divmod(Poly::linear(x)).first;
      ++mult;
    }
    if (mult > 0) out.emplace_back(x, mult);
  }
  if (remainder != nullptr) *remainder = rest;
  return out;
}

PartialFractions partial_fractions(const RatFn& f, std::uint64_t max_field_size) {
  const ExtField& field = f.field();
  Poly cofactor(field);
  const auto roots = linear_factors(f.den(), &cofactor, max_field_size);
  if (cofactor.degree() > 0) {
    throw Error(ErrorKind::DenominatorDoesNotSplit,
                "denominator " + f.den().to_string() + " keeps the factor " + cofactor.monic().to_string());
  }

  auto [quotient, rem] = f.num().divmod(f.den());
  PartialFractions out{quotient, {}};
  for (const auto& [alpha, mult] : roots) {
    // Laurent expansion at alpha: rem/den = (rem/C)(alpha + u) * u^-mult.
    const Poly c = f.den().divmod(Poly::linear(alpha).pow(mult)).first;
    const Poly rs = rem.taylor_shift(alpha);
    const Poly cs = c.taylor_shift(alpha);
    const ExtFieldElement c0_inv = cs.coeff(0).inverse();
    std::vector<ExtFieldElement> series(mult, field.zero());
    for (unsigned j = 0; j < mult; ++j) {
      ExtFieldElement acc = rs.coeff(j);
      for (unsigned l = 1; l <= j; ++l) acc -= cs.coeff(l) * series[j - l];
      series[j] = acc * c0_inv;
    }
    PoleExpansion pole{alpha, std::vector<ExtFieldElement>(mult, field.zero())};
    for (unsigned i = 1; i <= mult; ++i) pole.coeffs[i - 1] = series[mult - i];
    while (!pole.coeffs.empty() && pole.coeffs.back().is_zero()) pole.coeffs.pop_back();
    if (!pole.coeffs.empty()) out.poles.push_back(std::move(pole));
  }
  return out;
}

}  // namespace galmod
