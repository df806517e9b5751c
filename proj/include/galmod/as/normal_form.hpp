#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "galmod/algebra/ext_field.hpp"
#include "galmod/algebra/ratfn.hpp"
#include "galmod/fpg/group_algebra.hpp"
#include "json.hpp"

namespace galmod {

/// K = F_q(t) with q = p^(p^n), so that coefficient-wise Frobenius generates
/// Gal(K / F_p(t)) = Z/p^n.  theta is the smallest element of trace 1; the
/// constants {c theta : c in F_p} represent F_q / wp(F_q).
class ASContext {
 public:
  /// TooLarge when q exceeds max_q.
  ASContext(std::uint32_t p, std::uint32_t n, std::uint64_t max_q = 1u << 16);

  const GroupContext& group() const { return group_; }
  const ExtField& field() const { return field_; }
  std::uint32_t p() const { return group_.p(); }
  const ExtFieldElement& theta() const { return theta_; }

  /// Some y in F_q with y^p - y = c, when trace(c) = 0.
  std::optional<ExtFieldElement> wp_preimage(const ExtFieldElement& c) const;

 private:
  GroupContext group_;
  ExtField field_;
  ExtFieldElement theta_;
  MatrixFp wp_matrix_;  // x -> x^p - x on coefficient vectors
};

/// Key of the monomial c / (t - alpha)^order, alpha by field index.
struct PoleKey {
  std::uint64_t alpha;
  std::uint32_t order;
  auto operator<=>(const PoleKey&) const = default;
};

/// Canonical representative of a class in K / wp(K): pole orders and
/// polynomial degrees prime to p, every stored coefficient nonzero, and a
/// constant c theta with c in F_p.
struct ASNormalForm {
  std::map<PoleKey, ExtFieldElement> poles;
  std::map<std::uint32_t, ExtFieldElement> poly;  // degree >= 1
  std::uint32_t constant = 0;

  bool is_zero() const { return poles.empty() && poly.empty() && constant == 0; }
  bool operator==(const ASNormalForm& o) const = default;
};

/// f^p - f.
RatFn wp(const RatFn& f);

struct Reduction {
  ASNormalForm normal_form;
  RatFn certificate;  // f = embed(normal_form) + wp(certificate)
};

/// Hasse-style reduction.  Throws DenominatorDoesNotSplit.
Reduction reduce(const RatFn& f, const ASContext& ctx);
RatFn embed(const ASNormalForm& nf, const ASContext& ctx);

ASNormalForm add(const ASNormalForm& a, const ASNormalForm& b, const ASContext& ctx);
ASNormalForm scale(const ASNormalForm& a, std::uint32_t c, const ASContext& ctx);
/// Coefficient-wise Frobenius.  Normal forms are closed under it.
ASNormalForm act_sigma(const ASNormalForm& nf, const ASContext& ctx);

std::string to_string(const ASNormalForm& nf, const ASContext& ctx);
nlohmann::json to_json(const ASNormalForm& nf, const ASContext& ctx);

}  // namespace galmod
