#include "galmod/algebra/poly.hpp"

#include "galmod/error.hpp"

namespace galmod {

Poly::Poly(ExtField field, std::vector<ExtFieldElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.field() == field_)) throw Error(ErrorKind::ContextMismatch, "coefficient from a different field");
  }
  trim();
}

Poly Poly::constant(const ExtFieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const ExtFieldElement& c, std::size_t degree) {
  std::vector<ExtFieldElement> v(degree + 1, c.field().zero());
  v[degree] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::linear(const ExtFieldElement& alpha) {
  return Poly(alpha.field(), {-alpha, alpha.field().one()});
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::ContextMismatch, "polynomials over different fields");
}

ExtFieldElement Poly::leading() const { return c_.empty() ? field_.zero() : c_.back(); }

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<ExtFieldElement> r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<ExtFieldElement> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scaled(const ExtFieldElement& c) const {
  Poly r = *this;
  for (auto& x : r.c_) x = x * c;
  r.trim();
  return r;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(field_.one());
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  check_same(divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::OutOfRange, "polynomial division by zero");
  Poly rem = *this;
  if (degree() < divisor.degree()) return {Poly(field_), rem};
  std::vector<ExtFieldElement> q(c_.size() - divisor.c_.size() + 1, field_.zero());
  const ExtFieldElement lead_inv = divisor.leading().inverse();
  const std::size_t dd = divisor.c_.size();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const std::size_t shift = rem.c_.size() - dd;
    const ExtFieldElement f = rem.c_.back() * lead_inv;
    q[shift] = f;
    for (std::size_t i = 0; i < dd; ++i) rem.c_[shift + i] -= f * divisor.c_[i];
    rem.trim();
  }
  return {Poly(field_, std::move(q)), rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

ExtFieldElement Poly::eval(const ExtFieldElement& x) const {
  ExtFieldElement acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::taylor_shift(const ExtFieldElement& alpha) const {
  // Repeated synthetic division by (t - alpha).
  std::vector<ExtFieldElement> work = c_;
  std::vector<ExtFieldElement> out;
  out.reserve(work.size());
  while (!work.empty()) {
    for (std::size_t i = work.size() - 1; i-- > 0;) work[i] += work[i + 1] * alpha;
    out.push_back(work[0]);
    work.erase(work.begin());
  }
  return Poly(field_, std::move(out));
}

Poly Poly::frobenius_coeffs() const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.frobenius();
  return r;
}

std::size_t Poly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : c_) n += c.is_zero() ? 0 : 1;
  return n;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = c_.size(); d-- > 0;) {
    const auto& c = c_[d];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    if (d == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += cs + "*";
    out += "t";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace galmod
