#include "galmod/as/pairing.hpp"

#include <set>

#include "galmod/error.hpp"
#include "galmod/fpg/group_algebra.hpp"

namespace galmod {

namespace {

std::uint32_t base_degree(std::uint32_t p, std::uint32_t n, std::uint64_t max_big) {
  const GroupContext g(p, n);
  std::uint64_t big = 1;
  for (std::uint64_t i = 0; i < std::uint64_t{g.order()} * p; ++i) {
    big *= p;
    if (big > max_big) throw Error(ErrorKind::TooLarge, "F_(q^p) exceeds the bound " + std::to_string(max_big));
  }
  return g.order();
}

ExtFieldElement wp_of(const ExtFieldElement& y) { return y.pow(y.field().characteristic()) - y; }

}  // namespace

PairingField::PairingField(std::uint32_t p, std::uint32_t n, std::uint64_t max_big)
    : base_(ExtField::make(p, base_degree(p, n, max_big))),
      big_(ExtField::make(p, base_.degree() * p)),
      root_(galmod::embedding_root(base_, big_, max_big)),
      wp_root_(big_.size(), UINT64_MAX) {
  for (std::uint64_t i = 0; i < big_.size(); ++i) {
    const auto y = big_.from_index(i);
    auto& slot = wp_root_[wp_of(y).index()];
    if (slot == UINT64_MAX) slot = i;
  }
}

ExtFieldElement PairingField::to_big(const ExtFieldElement& x) const {
  if (!(x.field() == base_)) throw Error(ErrorKind::ContextMismatch, "element is not in the base field");
  return embed(x, root_);
}

ExtFieldElement PairingField::wp_root(const ExtFieldElement& x) const {
  const std::uint64_t r = wp_root_.at(x.index());
  if (r == UINT64_MAX) throw Error(ErrorKind::InvariantViolation, "no wp preimage in the big field");
  return big_.from_index(r);
}

ExtFieldElement PairingField::tau_power(const ExtFieldElement& x, std::uint64_t a) const {
  return x.frobenius_pow((a % p()) * base_.degree());
}

PairingInstance make_pairing_instance(std::shared_ptr<const PairingField> field, const ExtFieldElement& gamma) {
  const ExtField& F = field->base();
  for (std::uint64_t i = 0; i < F.size(); ++i) {
    if (wp_of(F.from_index(i)) == gamma) {
      throw Error(ErrorKind::ReduciblePolynomial,
                  "x^p - x - (" + gamma.to_string() + ") has the root " + F.from_index(i).to_string() + " in F_q");
    }
  }
  ExtFieldElement rho = field->wp_root(field->to_big(gamma));
  return {std::move(field), gamma, std::move(rho)};
}

std::uint32_t pairing(const PairingInstance& inst, std::uint64_t a, std::uint32_t c) {
  const ExtFieldElement r = inst.rho + inst.field->big().from_int(c);
  const ExtFieldElement v = inst.field->tau_power(r, a) - r;
  if (!v.in_prime_field()) throw Error(ErrorKind::InvariantViolation, "pairing value outside F_p");
  return v.prime_value();
}

PairingReport pairing_perfect_equivariant(std::uint32_t p, std::uint32_t n, std::uint64_t max_big) {
  const PairingField L(p, n, max_big);
  const ExtField& F = L.base();
  const ExtField& B = L.big();
  const std::uint64_t q = F.size();
  const std::uint64_t m = F.degree();
  PairingReport r;
  r.p = p;
  r.n = n;
  r.q = q;
  r.big = B.size();

  // value[a][gamma] from one root, checking the other p - 1 roots agree
  std::vector<std::vector<std::uint32_t>> value(p, std::vector<std::uint32_t>(q, 0));
  for (std::uint64_t gi = 0; gi < q; ++gi) {
    const ExtFieldElement rho = L.wp_root(L.to_big(F.from_index(gi)));
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t c = 0; c < p; ++c) {
        const ExtFieldElement root = rho + B.from_int(c);
        const ExtFieldElement v = L.tau_power(root, a) - root;
        if (!v.in_prime_field()) {
          r.values_in_prime_field = false;
          continue;
        }
        if (c == 0) {
          value[a][gi] = v.prime_value();
        } else if (v.prime_value() != value[a][gi]) {
          r.root_choice_independent = false;
        }
      }
    }
  }

  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      for (std::uint64_t gi = 0; gi < q; ++gi) {
        if (value[(a + b) % p][gi] != (value[a][gi] + value[b][gi]) % p) r.bilinear = false;
      }
    }
    for (std::uint64_t gi = 0; gi < q; ++gi) {
      for (std::uint64_t hi = 0; hi < q; ++hi) {
        const std::uint64_t sum = (F.from_index(gi) + F.from_index(hi)).index();
        if (value[a][sum] != (value[a][gi] + value[a][hi]) % p) r.bilinear = false;
      }
    }
  }

  std::set<std::uint64_t> wp_image;
  for (std::uint64_t i = 0; i < q; ++i) wp_image.insert(wp_of(F.from_index(i)).index());
  r.wp_image_size = wp_image.size();
  for (std::uint64_t gi = 0; gi < q; ++gi) {
    bool kernel = true;
    for (std::uint32_t a = 0; a < p; ++a) kernel = kernel && value[a][gi] == 0;
    if (kernel != (wp_image.count(gi) > 0)) r.right_kernel_is_wp = false;
  }
  for (std::uint32_t a = 1; a < p; ++a) {
    bool kernel = true;
    for (std::uint64_t gi = 0; gi < q; ++gi) kernel = kernel && value[a][gi] == 0;
    if (kernel) r.left_kernel_trivial = false;
  }

  // <s tau s^-1, sigma gamma> = sigma <tau, gamma> for every lift s = x -> x^(p^e)
  // of sigma, e = 1 + m j; s^-1 is x -> x^(p^(mp - e)).
  for (std::uint64_t j = 0; j < p; ++j) {
    const std::uint64_t e = 1 + m * j, e_inv = m * p - e;
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint64_t gi = 0; gi < q; ++gi) {
        const ExtFieldElement sg = F.from_index(gi).frobenius();
        const ExtFieldElement root = L.wp_root(L.to_big(sg));
        const ExtFieldElement lhs = L.tau_power(root.frobenius_pow(e_inv), a).frobenius_pow(e) - root;
        const ExtFieldElement rhs = B.from_int(value[a][gi]).frobenius();
        if (!(lhs == rhs)) r.equivariant = false;
      }
    }
  }

  // theta: smallest element of trace 1
  ExtFieldElement theta = F.zero();
  for (std::uint64_t i = 0; i < q; ++i) {
    if (F.from_index(i).trace().value() == 1) {
      theta = F.from_index(i);
      break;
    }
  }
  r.theta_table.assign(p, std::vector<std::uint32_t>(p, 0));
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t c = 0; c < p; ++c) r.theta_table[a][c] = value[a][theta.scaled(c).index()];
  }
  return r;
}

nlohmann::json to_json(const PairingReport& r) {
  return {{"p", r.p},
          {"n", r.n},
          {"q", r.q},
          {"big_field", r.big},
          {"values_in_prime_field", r.values_in_prime_field},
          {"root_choice_independent", r.root_choice_independent},
          {"bilinear", r.bilinear},
          {"right_kernel_is_wp_image", r.right_kernel_is_wp},
          {"left_kernel_trivial", r.left_kernel_trivial},
          {"wp_image_size", r.wp_image_size},
          {"perfect", r.perfect()},
          {"equivariant", r.equivariant},
          {"theta_table", r.theta_table},
          {"passed", r.passed()}};
}

}  // namespace galmod
