#include "galmod/fpg/module.hpp"

#include <algorithm>

#include "galmod/algebra/prime_field.hpp"
#include "galmod/error.hpp"

namespace galmod {

FpGModule::FpGModule(const GroupContext& ctx, MatrixFp sigma) {
  if (sigma.rows() != sigma.cols()) throw Error(ErrorKind::DimensionMismatch, "sigma must be square");
  if (sigma.modulus() != ctx.p()) throw Error(ErrorKind::ContextMismatch, "sigma is over the wrong prime");
  const std::size_t d = sigma.rows();
  if (sigma.rank() != d) throw Error(ErrorKind::InvariantViolation, "sigma is not invertible");
  if (!sigma.pow(ctx.order()).is_identity()) {
    throw Error(ErrorKind::InvariantViolation, "sigma^" + std::to_string(ctx.order()) + " is not the identity");
  }
  if (!(sigma - MatrixFp::identity(d, ctx.p())).pow(ctx.order()).is_zero()) {
    throw Error(ErrorKind::InvariantViolation, "(sigma - 1)^" + std::to_string(ctx.order()) + " is not zero");
  }
  d_ = std::make_shared<const Data>(Data{ctx, std::move(sigma)});
}

FpGModule FpGModule::regular(const GroupContext& ctx) {
  const std::size_t N = ctx.order();
  MatrixFp s(N, N, ctx.p());
  for (std::size_t i = 0; i < N; ++i) s.set((i + 1) % N, i, 1);
  return {ctx, std::move(s)};
}

FpGModule FpGModule::free(const GroupContext& ctx, std::size_t rank) {
  FpGModule m = trivial(ctx, 0);
  for (std::size_t i = 0; i < rank; ++i) m = direct_sum(m, regular(ctx));
  return m;
}

FpGModule FpGModule::trivial(const GroupContext& ctx, std::size_t dim) {
  return {ctx, MatrixFp::identity(dim, ctx.p())};
}

FpGModule FpGModule::jordan_block(const GroupContext& ctx, std::size_t length) {
  if (length == 0 || length > ctx.order()) {
    throw Error(ErrorKind::OutOfRange, "cyclic summand length must lie in [1, " + std::to_string(ctx.order()) + "]");
  }
  MatrixFp s = MatrixFp::identity(length, ctx.p());
  for (std::size_t i = 0; i + 1 < length; ++i) s.set(i + 1, i, 1);
  return {ctx, std::move(s)};
}

MatrixFp FpGModule::sigma_minus_one() const { return sigma() - MatrixFp::identity(dim(), p()); }

VectorFp FpGModule::act(const GroupAlgebraElement& a, const VectorFp& v) const {
  if (!(a.context() == context())) throw Error(ErrorKind::ContextMismatch, "group algebra element over another group");
  VectorFp acc(dim(), 0);
  VectorFp power = v;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != 0) acc = add_vectors(acc, scale_vector(power, a.coeffs()[i], p()), p());
    power = act(power);
  }
  return acc;
}

FpGModule FpGModule::conjugated(const MatrixFp& change_of_basis) const {
  const auto inv = change_of_basis.inverse();
  if (!inv) throw Error(ErrorKind::InvariantViolation, "change of basis is singular");
  return {context(), change_of_basis * sigma() * *inv};
}

FpGModule direct_sum(const FpGModule& a, const FpGModule& b) {
  if (!(a.context() == b.context())) throw Error(ErrorKind::ContextMismatch, "direct sum over different groups");
  const std::size_t da = a.dim(), db = b.dim();
  MatrixFp s(da + db, da + db, a.p());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) s.set(i, j, a.sigma()(i, j));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) s.set(da + i, da + j, b.sigma()(i, j));
  return {a.context(), std::move(s)};
}

namespace {

std::vector<std::size_t> pivots_of(const MatrixFp& rref_rows) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < rref_rows.rows(); ++i) {
    const auto r = rref_rows.row(i);
    piv.push_back(static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](auto x) { return x != 0; }) - r.begin()));
  }
  return piv;
}

// Rows of `rows` with sigma applied to each.
MatrixFp sigma_images(const FpGModule& m, const MatrixFp& rows) { return rows * m.sigma().transpose(); }

}  // namespace

Submodule::Submodule(FpGModule parent, const MatrixFp& spanning_rows) : parent_(std::move(parent)) {
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != parent_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "submodule rows have the wrong length");
  }
  basis_ = spanning_rows.rows() == 0 ? MatrixFp(0, parent_.dim(), parent_.p()) : spanning_rows.row_space();
  pivots_ = pivots_of(basis_);
  const MatrixFp images = sigma_images(parent_, basis_);
  for (std::size_t i = 0; i < images.rows(); ++i) {
    if (!contains(images.row_vector(i))) throw Error(ErrorKind::InvariantViolation, "subspace is not sigma-stable");
  }
}

Submodule Submodule::zero(const FpGModule& parent) { return {parent, MatrixFp(0, parent.dim(), parent.p())}; }

Submodule Submodule::whole(const FpGModule& parent) { return {parent, MatrixFp::identity(parent.dim(), parent.p())}; }

bool Submodule::contains(const VectorFp& v) const {
  if (v.size() != parent_.dim()) throw Error(ErrorKind::DimensionMismatch, "vector has the wrong length");
  const std::uint32_t p = parent_.p();
  VectorFp r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::uint32_t f = r[pivots_[i]];
    if (f == 0) continue;
    const auto row = basis_.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = modp::sub(r[j], modp::mul(f, row[j], p), p);
  }
  return is_zero_vector(r);
}

bool Submodule::contains(const Submodule& o) const {
  for (std::size_t i = 0; i < o.basis_.rows(); ++i) {
    if (!contains(o.basis_.row_vector(i))) return false;
  }
  return true;
}

VectorFp Submodule::coordinates(const VectorFp& v) const {
  if (!contains(v)) throw Error(ErrorKind::OutOfRange, "vector is not in the submodule");
  VectorFp c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

FpGModule Submodule::as_module() const {
  const std::size_t s = dim();
  const MatrixFp images = sigma_images(parent_, basis_);
  MatrixFp r(s, s, parent_.p());
  for (std::size_t col = 0; col < s; ++col) {
    for (std::size_t i = 0; i < s; ++i) r.set(i, col, images(col, pivots_[i]));
  }
  return {parent_.context(), std::move(r)};
}

std::vector<std::size_t> rank_sequence(const FpGModule& m) {
  const MatrixFp a = m.sigma_minus_one();
  std::vector<std::size_t> ranks;
  MatrixFp power = MatrixFp::identity(m.dim(), m.p());
  for (std::uint32_t i = 0; i <= m.context().order(); ++i) {
    ranks.push_back(power.rank());
    if (ranks.back() == 0) {
      ranks.resize(m.context().order() + 1, 0);
      break;
    }
    power = power * a;
  }
  return ranks;
}

std::vector<std::size_t> decompose(const FpGModule& m) {
  const auto r = rank_sequence(m);
  const std::size_t N = m.context().order();
  auto at_least = [&](std::size_t len) -> std::size_t { return len > N ? 0 : r[len - 1] - r[len]; };
  std::vector<std::size_t> lengths;
  for (std::size_t len = N; len >= 1; --len) {
    const std::size_t exact = at_least(len) - at_least(len + 1);
    lengths.insert(lengths.end(), exact, len);
  }
  return lengths;
}

bool is_free(const FpGModule& m, std::size_t rank) {
  const auto lengths = decompose(m);
  return lengths.size() == rank &&
         std::all_of(lengths.begin(), lengths.end(), [&](std::size_t l) { return l == m.context().order(); });
}

Submodule submodule_generated(const FpGModule& m, const std::vector<VectorFp>& vectors) {
  if (vectors.empty()) return Submodule::zero(m);
  MatrixFp span = MatrixFp::from_rows(vectors, m.dim(), m.p()).row_space();
  for (;;) {
    MatrixFp next = span.stacked(sigma_images(m, span)).row_space();
    if (next.rows() == span.rows()) break;
    span = std::move(next);
  }
  auto piv = pivots_of(span);
  return Submodule(m, std::move(span), std::move(piv));
}

Submodule kernel_power(const FpGModule& m, std::size_t e) {
  if (e > m.context().order()) {
    throw Error(ErrorKind::OutOfRange, "kernel exponent " + std::to_string(e) + " exceeds " +
                                           std::to_string(m.context().order()));
  }
  return {m, m.sigma_minus_one().pow(e).kernel()};
}

Submodule image_power(const FpGModule& m, std::size_t e) {
  return {m, m.sigma_minus_one().pow(e).transpose()};
}

FpGModule dual_module(const FpGModule& m) {
  const auto inv = m.sigma().inverse();
  return {m.context(), inv->transpose()};
}

MatrixFp norm_matrix(const FpGModule& m) { return m.sigma().geometric_sum(m.context().order()); }

std::size_t cyclic_h1(const FpGModule& m) {
  const std::size_t d = m.dim();
  return (d - norm_matrix(m).rank()) - m.sigma_minus_one().rank();
}

std::size_t cyclic_h2(const FpGModule& m) {
  const std::size_t d = m.dim();
  return (d - m.sigma_minus_one().rank()) - norm_matrix(m).rank();
}

}  // namespace galmod
