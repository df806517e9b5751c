#include "galmod/algebra/ratfn.hpp"

#include "galmod/error.hpp"

namespace galmod {

RatFn::RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field().one())) {}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::OutOfRange, "rational function with zero denominator");
  if (!(num_.field() == den_.field())) throw Error(ErrorKind::ContextMismatch, "numerator and denominator fields differ");
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field().one());
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const ExtFieldElement s = den_.leading().inverse();
  num_ = num_.scaled(s);
  den_ = den_.scaled(s);
}

RatFn RatFn::operator+(const RatFn& o) const {
  if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator-() const { return RatFn(Normalized{}, -num_, den_); }

RatFn RatFn::operator*(const RatFn& o) const { return RatFn(num_ * o.num_, den_ * o.den_); }

RatFn RatFn::operator/(const RatFn& o) const {
  if (o.is_zero()) throw Error(ErrorKind::OutOfRange, "division by the zero rational function");
  return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::pow(std::uint64_t e) const { return RatFn(Normalized{}, num_.pow(e), den_.pow(e)); }

RatFn RatFn::frobenius_coeffs() const {
  // Frobenius is a field automorphism, so lowest terms and monicity survive.
  return RatFn(Normalized{}, num_.frobenius_coeffs(), den_.frobenius_coeffs());
}

std::string RatFn::to_string() const {
  std::string n = num_.to_string();
  if (is_polynomial()) return n;
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace galmod
