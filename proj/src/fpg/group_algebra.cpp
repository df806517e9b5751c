#include "galmod/fpg/group_algebra.hpp"

#include <sstream>

#include "galmod/algebra/prime_field.hpp"
#include "galmod/error.hpp"

namespace galmod {

GroupContext::GroupContext(std::uint32_t p, std::uint32_t n) : p_(p), n_(n), order_(1) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (n == 0) throw Error(ErrorKind::OutOfRange, "n must be at least 1");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (order_ > (1u << 20) / p) throw Error(ErrorKind::TooLarge, "p^n exceeds 2^20");
    order_ *= p;
  }
}

std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  std::uint32_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // small binomial by multiplicative formula mod p (nd < p, so no zero divisors)
    std::uint32_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < kd; ++i) {
      num = modp::mul(num, static_cast<std::uint32_t>(nd - i), p);
      den = modp::mul(den, static_cast<std::uint32_t>(i + 1), p);
    }
    result = modp::mul(result, modp::mul(num, modp::inv(den, p), p), p);
    n /= p;
    k /= p;
  }
  return result;
}

GroupAlgebraElement::GroupAlgebraElement(const GroupContext& ctx) : ctx_(ctx), c_(ctx.order(), 0) {}

GroupAlgebraElement::GroupAlgebraElement(const GroupContext& ctx, VectorFp coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
  if (c_.size() != ctx.order()) {
    throw Error(ErrorKind::DimensionMismatch,
                "group algebra element needs " + std::to_string(ctx.order()) + " coefficients, got " +
                    std::to_string(c_.size()));
  }
  for (auto& x : c_) x %= ctx.p();
}

GroupAlgebraElement GroupAlgebraElement::sigma_power(const GroupContext& ctx, std::int64_t j) {
  GroupAlgebraElement e(ctx);
  const std::int64_t N = ctx.order();
  e.c_[static_cast<std::size_t>(((j % N) + N) % N)] = 1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::from_sigma_basis(const GroupContext& ctx, const VectorFp& coeffs) {
  const std::uint32_t N = ctx.order(), p = ctx.p();
  if (coeffs.size() != N) throw Error(ErrorKind::DimensionMismatch, "sigma-basis vector has wrong length");
  // (sigma - 1)^k = sum_i C(k, i) (-1)^(k - i) sigma^i
  VectorFp out(N, 0);
  for (std::uint32_t k = 0; k < N; ++k) {
    if (coeffs[k] % p == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) {
      std::uint32_t b = binomial_mod_p(k, i, p);
      if ((k - i) % 2 == 1) b = modp::neg(b, p);
      out[i] = modp::add(out[i], modp::mul(b, coeffs[k] % p, p), p);
    }
  }
  return {ctx, std::move(out)};
}

void GroupAlgebraElement::check_same(const GroupAlgebraElement& o) const {
  if (!(ctx_ == o.ctx_)) throw Error(ErrorKind::ContextMismatch, "group algebra elements over different groups");
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  check_same(o);
  return {ctx_, add_vectors(c_, o.c_, ctx_.p())};
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const { return *this + (-o); }

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement r = *this;
  for (auto& x : r.c_) x = modp::neg(x, ctx_.p());
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  check_same(o);
  const std::size_t N = c_.size();
  std::vector<std::uint64_t> acc(N, 0);
  for (std::size_t i = 0; i < N; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < N; ++j) acc[(i + j) % N] += static_cast<std::uint64_t>(c_[i]) * o.c_[j];
  }
  VectorFp r(N);
  for (std::size_t i = 0; i < N; ++i) r[i] = static_cast<std::uint32_t>(acc[i] % ctx_.p());
  return {ctx_, std::move(r)};
}

GroupAlgebraElement GroupAlgebraElement::scaled(std::uint32_t c) const {
  return {ctx_, scale_vector(c_, c, ctx_.p())};
}

GroupAlgebraElement GroupAlgebraElement::pow(std::uint64_t e) const {
  GroupAlgebraElement result = one(ctx_);
  GroupAlgebraElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

GroupAlgebraElement GroupAlgebraElement::shifted(std::int64_t j) const {
  const std::int64_t N = ctx_.order();
  const std::size_t s = static_cast<std::size_t>(((j % N) + N) % N);
  VectorFp r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[(i + s) % c_.size()] = c_[i];
  return {ctx_, std::move(r)};
}

VectorFp GroupAlgebraElement::in_sigma_basis() const {
  // sigma^i = (1 + (sigma - 1))^i = sum_k C(i, k) (sigma - 1)^k
  const std::uint32_t N = ctx_.order(), p = ctx_.p();
  VectorFp out(N, 0);
  for (std::uint32_t i = 0; i < N; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t k = 0; k <= i; ++k) {
      out[k] = modp::add(out[k], modp::mul(c_[i], binomial_mod_p(i, k, p), p), p);
    }
  }
  return out;
}

std::uint32_t GroupAlgebraElement::valuation() const {
  const VectorFp b = in_sigma_basis();
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    if (b[i] != 0) return i;
  }
  return ctx_.order();
}

std::uint32_t GroupAlgebraElement::augmentation() const {
  std::uint32_t s = 0;
  for (auto x : c_) s = modp::add(s, x, ctx_.p());
  return s;
}

std::string GroupAlgebraElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i > 0) os << (c_[i] != 1 ? "*" : "") << "s" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

GroupAlgebraElement norm_element(const GroupContext& ctx, std::int64_t j) {
  GroupAlgebraElement acc(ctx);
  for (std::uint32_t i = 0; i < ctx.order(); ++i) acc = acc + GroupAlgebraElement::sigma_power(ctx, j * i);
  return acc;
}

}  // namespace galmod
