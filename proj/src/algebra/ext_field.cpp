#include "galmod/algebra/ext_field.hpp"

#include <sstream>

#include "galmod/error.hpp"

namespace galmod {

namespace fp_poly {

void trim(VectorFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

VectorFp mul(const VectorFp& a, const VectorFp& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  VectorFp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = modp::add(r[i + j], modp::mul(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

VectorFp mod(const VectorFp& a, const VectorFp& m, std::uint32_t p) {
  VectorFp r = a;
  trim(r);
  VectorFp d = m;
  trim(d);
  if (d.empty()) throw Error(ErrorKind::OutOfRange, "polynomial division by zero");
  const std::uint32_t lead_inv = modp::inv(d.back(), p);
  while (r.size() >= d.size()) {
    const std::uint32_t c = modp::mul(r.back(), lead_inv, p);
    const std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] = modp::sub(r[shift + i], modp::mul(c, d[i], p), p);
    trim(r);
  }
  return r;
}

VectorFp gcd(VectorFp a, VectorFp b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    VectorFp r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t s = modp::inv(a.back(), p);
    for (auto& c : a) c = modp::mul(c, s, p);
  }
  return a;
}

namespace {

VectorFp powmod(VectorFp base, std::uint64_t e, const VectorFp& m, std::uint32_t p) {
  VectorFp result{1};
  base = mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base, p), m, p);
    e >>= 1;
    if (e > 0) base = mod(mul(base, base, p), m, p);
  }
  return mod(result, m, p);
}

}  // namespace

VectorFp frobenius_power_of_x(std::uint64_t e, const VectorFp& m, std::uint32_t p) {
  VectorFp r = mod(VectorFp{0, 1}, m, p);
  for (std::uint64_t i = 0; i < e; ++i) r = powmod(r, p, m, p);
  return r;
}

bool is_irreducible(const VectorFp& monic, std::uint32_t p) {
  VectorFp f = monic;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint64_t m = f.size() - 1;
  if (m == 1) return true;
  const VectorFp x = mod(VectorFp{0, 1}, f, p);
  if (frobenius_power_of_x(m, f, p) != x) return false;
  for (std::uint64_t r = 2; r <= m; ++r) {
    if (m % r != 0 || !is_prime(r)) continue;
    VectorFp h = frobenius_power_of_x(m / r, f, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = modp::sub(h[1], 1, p);
    trim(h);
    if (h.empty() || gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace fp_poly

ExtField ExtField::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::OutOfRange, "extension degree must be positive");
  if (p >= (1u << 16)) throw Error(ErrorKind::OutOfRange, "characteristic above 2^16 is not supported");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (size > (std::uint64_t{1} << 40)) throw Error(ErrorKind::TooLarge, "field too large to index");
    size *= p;
  }

  VectorFp modulus;
  for (std::uint64_t code = 0; code < size; ++code) {
    VectorFp f(m + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (fp_poly::is_irreducible(f, p)) {
      modulus = std::move(f);
      break;
    }
  }

  MatrixFp frob(m, m, p);
  for (std::uint32_t j = 0; j < m; ++j) {
    // (g^j)^p = g^(jp) mod f
    VectorFp mono(static_cast<std::size_t>(j) * p + 1, 0);
    mono.back() = 1;
    VectorFp img = fp_poly::mod(mono, modulus, p);
    for (std::size_t i = 0; i < img.size(); ++i) frob.set(i, j, img[i]);
  }
  const MatrixFp trace_map = frob.geometric_sum(m);
  VectorFp traces(m);
  for (std::uint32_t j = 0; j < m; ++j) traces[j] = trace_map(0, j);

  return ExtField(std::make_shared<const Data>(Data{p, m, size, std::move(modulus), std::move(frob), std::move(traces)}));
}

ExtField make_ext_field(std::uint32_t p, std::uint32_t m) { return ExtField::make(p, m); }

bool ExtField::operator==(const ExtField& o) const {
  return data_ == o.data_ || (data_->p == o.data_->p && data_->modulus == o.data_->modulus);
}

ExtFieldElement ExtField::zero() const { return {*this, VectorFp(degree(), 0)}; }

ExtFieldElement ExtField::one() const { return from_int(1); }

ExtFieldElement ExtField::generator() const {
  return from_coeffs(fp_poly::mod(VectorFp{0, 1}, modulus(), characteristic()));
}

ExtFieldElement ExtField::from_int(std::int64_t v) const {
  VectorFp c(degree(), 0);
  c[0] = modp::reduce(v, characteristic());
  return {*this, std::move(c)};
}

ExtFieldElement ExtField::from_coeffs(const VectorFp& c) const {
  if (c.size() > degree()) {
    VectorFp reduced = fp_poly::mod(c, modulus(), characteristic());
    reduced.resize(degree(), 0);
    return {*this, std::move(reduced)};
  }
  VectorFp v(degree(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i] % characteristic();
  return {*this, std::move(v)};
}

ExtFieldElement ExtField::from_index(std::uint64_t index) const {
  if (index >= size()) throw Error(ErrorKind::OutOfRange, "element index " + std::to_string(index) + " out of range");
  VectorFp c(degree(), 0);
  for (std::uint32_t i = 0; i < degree(); ++i) {
    c[i] = static_cast<std::uint32_t>(index % characteristic());
    index /= characteristic();
  }
  return {*this, std::move(c)};
}

void ExtFieldElement::check_same(const ExtFieldElement& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::ContextMismatch, "elements of different fields");
}

bool ExtFieldElement::is_one() const { return in_prime_field() && c_[0] == 1; }

bool ExtFieldElement::in_prime_field() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

std::uint32_t ExtFieldElement::prime_value() const {
  if (!in_prime_field()) throw Error(ErrorKind::OutOfRange, to_string() + " is not in the prime field");
  return c_[0];
}

std::uint64_t ExtFieldElement::index() const {
  std::uint64_t v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * field_.characteristic() + c_[i];
  return v;
}

ExtFieldElement ExtFieldElement::operator+(const ExtFieldElement& o) const {
  check_same(o);
  return {field_, add_vectors(c_, o.c_, field_.characteristic())};
}

ExtFieldElement ExtFieldElement::operator-(const ExtFieldElement& o) const { return *this + (-o); }

ExtFieldElement ExtFieldElement::operator-() const {
  VectorFp r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = modp::neg(c_[i], field_.characteristic());
  return {field_, std::move(r)};
}

ExtFieldElement ExtFieldElement::operator*(const ExtFieldElement& o) const {
  check_same(o);
  const std::uint32_t p = field_.characteristic();
  const std::size_t m = field_.degree();
  if (m == 1) return {field_, VectorFp{modp::mul(c_[0], o.c_[0], p)}};
  std::vector<std::uint64_t> prod(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] += static_cast<std::uint64_t>(c_[i]) * o.c_[j];
  }
  VectorFp r(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) r[i] = static_cast<std::uint32_t>(prod[i] % p);
  const auto& f = field_.modulus();
  for (std::size_t d = r.size(); d-- > m;) {
    const std::uint32_t c = r[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i < m; ++i) r[d - m + i] = modp::sub(r[d - m + i], modp::mul(c, f[i], p), p);
    r[d] = 0;
  }
  r.resize(m);
  return {field_, std::move(r)};
}

ExtFieldElement ExtFieldElement::operator/(const ExtFieldElement& o) const { return *this * o.inverse(); }

ExtFieldElement ExtFieldElement::scaled(std::uint32_t c) const {
  return {field_, scale_vector(c_, c, field_.characteristic())};
}

ExtFieldElement ExtFieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::OutOfRange, "inverse of zero");
  return pow(field_.size() - 2);
}

ExtFieldElement ExtFieldElement::pow(std::uint64_t e) const {
  ExtFieldElement result = field_.one();
  ExtFieldElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ExtFieldElement ExtFieldElement::frobenius() const {
  return {field_, field_.frobenius_matrix().apply(c_)};
}

ExtFieldElement ExtFieldElement::frobenius_pow(std::uint64_t times) const {
  ExtFieldElement r = *this;
  for (std::uint64_t i = 0; i < times % field_.degree(); ++i) r = r.frobenius();
  return r;
}

PrimeFieldElement ExtFieldElement::trace() const {
  const std::uint32_t p = field_.characteristic();
  std::uint32_t t = 0;
  const auto& traces = field_.data_->basis_traces;
  for (std::size_t i = 0; i < c_.size(); ++i) t = modp::add(t, modp::mul(c_[i], traces[i], p), p);
  return {t, p};
}

std::uint32_t ExtFieldElement::orbit_size() const {
  ExtFieldElement y = frobenius();
  std::uint32_t s = 1;
  while (!(y == *this)) {
    y = y.frobenius();
    ++s;
  }
  return s;
}

std::string ExtFieldElement::to_string() const {
  if (field_.degree() == 1 || in_prime_field()) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const std::uint32_t c = c_[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'g';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtFieldElement& x) { return os << x.to_string(); }

std::vector<ExtFieldElement> all_elements(const ExtField& f, std::uint64_t max_size) {
  if (f.size() > max_size) {
    throw Error(ErrorKind::TooLarge, "refusing to enumerate a field of size " + std::to_string(f.size()));
  }
  std::vector<ExtFieldElement> out;
  out.reserve(f.size());
  for (std::uint64_t i = 0; i < f.size(); ++i) out.push_back(f.from_index(i));
  return out;
}

ExtFieldElement embedding_root(const ExtField& small, const ExtField& big, std::uint64_t max_size) {
  if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0) {
    throw Error(ErrorKind::ContextMismatch, "no embedding F_" + std::to_string(small.size()) + " -> F_" +
                                                std::to_string(big.size()));
  }
  if (big.size() > max_size) throw Error(ErrorKind::TooLarge, "embedding search over F_" + std::to_string(big.size()));
  const auto& f = small.modulus();
  for (std::uint64_t i = 0; i < big.size(); ++i) {
    const ExtFieldElement x = big.from_index(i);
    ExtFieldElement acc = big.zero();
    for (std::size_t d = f.size(); d-- > 0;) acc = acc * x + big.from_int(f[d]);
    if (acc.is_zero()) return x;
  }
  throw Error(ErrorKind::InvariantViolation, "defining polynomial has no root in the larger field");
}

ExtFieldElement embed(const ExtFieldElement& x, const ExtFieldElement& root) {
  const ExtField& big = root.field();
  ExtFieldElement acc = big.zero();
  const auto& c = x.coeffs();
  for (std::size_t d = c.size(); d-- > 0;) acc = acc * root + big.from_int(c[d]);
  return acc;
}

}  // namespace galmod
