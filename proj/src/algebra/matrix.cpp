#include "galmod/algebra/matrix.hpp"

#include <string>

#include "galmod/algebra/prime_field.hpp"
#include "galmod/error.hpp"

namespace galmod {

namespace {

std::string shape(const MatrixFp& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

MatrixFp MatrixFp::identity(std::size_t n, std::uint32_t p) {
  MatrixFp m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1 % p;
  return m;
}

MatrixFp MatrixFp::from_rows(const std::vector<VectorFp>& rows, std::size_t cols, std::uint32_t p) {
  MatrixFp m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch,
                  "row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                      ", expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m.a_[i * cols + j] = rows[i][j] % p;
  }
  return m;
}

VectorFp MatrixFp::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

std::vector<VectorFp> MatrixFp::row_vectors() const {
  std::vector<VectorFp> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

void MatrixFp::check_same_shape(const MatrixFp& o) const {
  check_modulus(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorKind::DimensionMismatch, shape(*this) + " vs " + shape(o));
  }
}

void MatrixFp::check_modulus(const MatrixFp& o) const {
  if (p_ != o.p_) throw Error(ErrorKind::ContextMismatch, "matrices over different primes");
}

MatrixFp MatrixFp::operator+(const MatrixFp& o) const {
  check_same_shape(o);
  MatrixFp r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = modp::add(a_[i], o.a_[i], p_);
  return r;
}

MatrixFp MatrixFp::operator-(const MatrixFp& o) const {
  check_same_shape(o);
  MatrixFp r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = modp::sub(a_[i], o.a_[i], p_);
  return r;
}

MatrixFp MatrixFp::operator*(const MatrixFp& o) const {
  check_modulus(o);
  if (cols_ != o.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "product of " + shape(*this) + " and " + shape(o));
  }
  MatrixFp r(rows_, o.cols_, p_);
  std::vector<std::uint64_t> acc(o.cols_);
  // Entries are < 2^16 in practice, so p^2 * cols stays far below 2^64 for
  // the dimensions used here; reduce once per row.
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t l = 0; l < cols_; ++l) {
      const std::uint64_t x = a_[i * cols_ + l];
      if (x == 0) continue;
      const std::uint32_t* orow = o.a_.data() + l * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += x * orow[j];
    }
    for (std::size_t j = 0; j < o.cols_; ++j) r.a_[i * o.cols_ + j] = static_cast<std::uint32_t>(acc[j] % p_);
  }
  return r;
}

MatrixFp MatrixFp::scaled(std::uint32_t c) const {
  MatrixFp r = *this;
  for (auto& x : r.a_) x = modp::mul(x, c % p_, p_);
  return r;
}

MatrixFp MatrixFp::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "power of non-square " + shape(*this));
  MatrixFp result = identity(rows_, p_);
  MatrixFp base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MatrixFp MatrixFp::geometric_sum(std::uint64_t count) const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "geometric sum of " + shape(*this));
  // Invariant: sum = I + A + ... + A^(len-1), power = A^len.
  MatrixFp sum(rows_, cols_, p_);
  MatrixFp power = identity(rows_, p_);
  int top = 63;
  while (top >= 0 && ((count >> top) & 1) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    sum = sum + power * sum;  // len -> 2 len
    power = power * power;
    if ((count >> bit) & 1) {  // len -> len + 1
      sum = sum + power;
      power = power * *this;
    }
  }
  return sum;
}

MatrixFp MatrixFp::transpose() const {
  MatrixFp r(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
  return r;
}

VectorFp MatrixFp::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " against " + shape(*this));
  }
  VectorFp out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(a_[i * cols_ + j]) * v[j];
    out[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

MatrixFp MatrixFp::stacked(const MatrixFp& below) const {
  check_modulus(below);
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw Error(ErrorKind::DimensionMismatch, "stacking " + shape(*this) + " on " + shape(below));
  MatrixFp r = *this;
  r.rows_ += below.rows_;
  r.a_.insert(r.a_.end(), below.a_.begin(), below.a_.end());
  return r;
}

bool MatrixFp::is_zero() const { return is_zero_vector(a_); }

bool MatrixFp::is_identity() const { return rows_ == cols_ && *this == identity(rows_, p_); }

MatrixFp::Rref MatrixFp::rref() const {
  Rref out{*this, {}};
  auto& m = out.reduced;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < cols_ && lead_row < rows_; ++col) {
    std::size_t pivot = lead_row;
    while (pivot < rows_ && m.a_[pivot * cols_ + col] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.a_[pivot * cols_ + j], m.a_[lead_row * cols_ + j]);
    }
    std::uint32_t* lr = m.a_.data() + lead_row * cols_;
    const std::uint32_t scale = modp::inv(lr[col], p_);
    for (std::size_t j = col; j < cols_; ++j) lr[j] = modp::mul(lr[j], scale, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead_row) continue;
      std::uint32_t* r = m.a_.data() + i * cols_;
      const std::uint32_t f = r[col];
      if (f == 0) continue;
      for (std::size_t j = col; j < cols_; ++j) r[j] = modp::sub(r[j], modp::mul(f, lr[j], p_), p_);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  return out;
}

std::size_t MatrixFp::rank() const { return rref().pivots.size(); }

MatrixFp MatrixFp::row_space() const {
  auto r = rref();
  MatrixFp out(r.pivots.size(), cols_, p_);
  std::copy(r.reduced.a_.begin(), r.reduced.a_.begin() + static_cast<std::ptrdiff_t>(r.pivots.size() * cols_),
            out.a_.begin());
  return out;
}

MatrixFp MatrixFp::kernel() const {
  auto r = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<VectorFp> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    VectorFp v(cols_, 0);
    v[free] = 1 % p_;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = modp::neg(r.reduced(i, free), p_);
    basis.push_back(std::move(v));
  }
  return from_rows(basis, cols_, p_).row_space();
}

std::optional<VectorFp> MatrixFp::solve(std::span<const std::uint32_t> b) const {
  if (b.size() != rows_) {
    throw Error(ErrorKind::DimensionMismatch,
                "right-hand side of length " + std::to_string(b.size()) + " against " + shape(*this));
  }
  MatrixFp aug(rows_, cols_ + 1, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.a_[i * (cols_ + 1) + j] = a_[i * cols_ + j];
    aug.a_[i * (cols_ + 1) + cols_] = b[i] % p_;
  }
  auto r = aug.rref();
  if (!r.pivots.empty() && r.pivots.back() == cols_) return std::nullopt;
  VectorFp x(cols_, 0);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, cols_);
  return x;
}

std::optional<MatrixFp> MatrixFp::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square " + shape(*this));
  const std::size_t n = rows_;
  MatrixFp aug(n, 2 * n, p_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.a_[i * 2 * n + j] = a_[i * n + j];
    aug.a_[i * 2 * n + n + i] = 1 % p_;
  }
  auto r = aug.rref();
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  MatrixFp inv(n, n, p_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.a_[i * n + j] = r.reduced(i, n + j);
  return inv;
}

VectorFp add_vectors(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
  VectorFp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = modp::add(a[i], b[i], p);
  return out;
}

VectorFp scale_vector(std::span<const std::uint32_t> a, std::uint32_t c, std::uint32_t p) {
  VectorFp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = modp::mul(a[i], c % p, p);
  return out;
}

}  // namespace galmod
