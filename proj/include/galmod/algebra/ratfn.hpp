#pragma once

#include <string>

#include "galmod/algebra/poly.hpp"

namespace galmod {

/// Element of F_q(t), always in lowest terms with a monic denominator, so
/// equality is structural.
class RatFn {
 public:
  explicit RatFn(const ExtField& field) : num_(field), den_(Poly::constant(field.one())) {}
  explicit RatFn(Poly num);
  RatFn(Poly num, Poly den);

  static RatFn constant(const ExtFieldElement& c) { return RatFn(Poly::constant(c)); }
  static RatFn t(const ExtField& field) { return RatFn(Poly::t(field)); }

  const ExtField& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;
  RatFn operator-() const;
  RatFn pow(std::uint64_t e) const;
  RatFn frobenius_coeffs() const;

  /// "(num)/(den)", dropping the bar when den = 1; parseable by parse_ratfn.
  std::string to_string() const;

  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  struct Normalized {};
  RatFn(Normalized, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

}  // namespace galmod
