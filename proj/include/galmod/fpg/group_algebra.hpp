#pragma once

#include <cstdint>
#include <string>

#include "galmod/algebra/matrix.hpp"

namespace galmod {

/// G = Z/p^n Z with a fixed generator sigma.
class GroupContext {
 public:
  GroupContext(std::uint32_t p, std::uint32_t n);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  /// |G| = p^n
  std::uint32_t order() const { return order_; }

  bool operator==(const GroupContext& o) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t order_;
};

/// C(n, k) mod p by Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Element of F_p[G], stored in the basis sigma^0, ..., sigma^(p^n - 1).
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(const GroupContext& ctx);
  GroupAlgebraElement(const GroupContext& ctx, VectorFp coeffs);

  static GroupAlgebraElement one(const GroupContext& ctx) { return sigma_power(ctx, 0); }
  static GroupAlgebraElement sigma_power(const GroupContext& ctx, std::int64_t j);
  /// Inverse of in_sigma_basis: coefficients in the basis (sigma - 1)^i.
  static GroupAlgebraElement from_sigma_basis(const GroupContext& ctx, const VectorFp& coeffs);

  const GroupContext& context() const { return ctx_; }
  const VectorFp& coeffs() const { return c_; }
  bool is_zero() const { return is_zero_vector(c_); }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-() const;
  /// Cyclic convolution.
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(std::uint32_t c) const;
  GroupAlgebraElement pow(std::uint64_t e) const;
  /// sigma^j * this, a cyclic shift of the coefficients.
  GroupAlgebraElement shifted(std::int64_t j) const;

  /// Coefficients in the basis (sigma - 1)^0, ..., (sigma - 1)^(p^n - 1).
  VectorFp in_sigma_basis() const;
  /// Largest r with (sigma - 1)^r dividing this; p^n for zero.
  std::uint32_t valuation() const;
  /// Sum of coefficients; zero exactly on the image of (sigma - 1).
  std::uint32_t augmentation() const;

  std::string to_string() const;

  bool operator==(const GroupAlgebraElement& o) const = default;

 private:
  void check_same(const GroupAlgebraElement& o) const;

  GroupContext ctx_;
  VectorFp c_;
};

/// 1 + sigma^j + sigma^(2j) + ... + sigma^((p^n - 1) j)
GroupAlgebraElement norm_element(const GroupContext& ctx, std::int64_t j);

}  // namespace galmod
