#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galmod/algebra/ext_field.hpp"

namespace galmod {

/// Univariate polynomial in t over an ExtField; coefficients constant first,
/// no trailing zeros.
class Poly {
 public:
  explicit Poly(ExtField field) : field_(std::move(field)) {}
  Poly(ExtField field, std::vector<ExtFieldElement> coeffs);

  static Poly constant(const ExtFieldElement& c);
  static Poly monomial(const ExtFieldElement& c, std::size_t degree);
  /// t - alpha
  static Poly linear(const ExtFieldElement& alpha);
  static Poly t(const ExtField& field) { return monomial(field.one(), 1); }

  const ExtField& field() const { return field_; }
  const std::vector<ExtFieldElement>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  ExtFieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  ExtFieldElement leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const ExtFieldElement& c) const;
  Poly pow(std::uint64_t e) const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly monic() const;

  ExtFieldElement eval(const ExtFieldElement& x) const;
  /// Coefficients of P(alpha + u) as a polynomial in u.
  Poly taylor_shift(const ExtFieldElement& alpha) const;
  /// Frobenius applied to every coefficient.
  Poly frobenius_coeffs() const;

  /// Number of nonzero terms.
  std::size_t term_count() const;
  /// e.g. "t^3 + g*t + 1"; see text_format.hpp for the grammar.
  std::string to_string() const;

  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

 private:
  void trim();
  void check_same(const Poly& o) const;

  ExtField field_;
  std::vector<ExtFieldElement> c_;
};

/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);

}  // namespace galmod
