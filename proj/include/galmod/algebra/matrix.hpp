#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace galmod {

using VectorFp = std::vector<std::uint32_t>;

/// Dense row-major matrix over F_p.  Vectors act as columns: apply(v) = A*v.
class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(std::size_t rows, std::size_t cols, std::uint32_t p);

  static MatrixFp identity(std::size_t n, std::uint32_t p);
  static MatrixFp from_rows(const std::vector<VectorFp>& rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint32_t v) { a_[i * cols_ + j] = v % p_; }

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {a_.data() + i * cols_, cols_};
  }
  VectorFp row_vector(std::size_t i) const;
  std::vector<VectorFp> row_vectors() const;
  const std::vector<std::uint32_t>& entries() const { return a_; }

  MatrixFp operator+(const MatrixFp& o) const;
  MatrixFp operator-(const MatrixFp& o) const;
  MatrixFp operator*(const MatrixFp& o) const;
  MatrixFp scaled(std::uint32_t c) const;
  MatrixFp pow(std::uint64_t e) const;
  /// I + A + ... + A^(count-1), by doubling.
  MatrixFp geometric_sum(std::uint64_t count) const;
  MatrixFp transpose() const;
  VectorFp apply(std::span<const std::uint32_t> v) const;

  /// Vertical concatenation.
  MatrixFp stacked(const MatrixFp& below) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const MatrixFp& o) const = default;

  struct Rref;
  /// Reduced row echelon form; same shape, zero rows last.
  Rref rref() const;
  std::size_t rank() const;
  /// Canonical basis of the row space: the nonzero rows of rref().
  MatrixFp row_space() const;
  /// Rows form a basis of {x : A x = 0}, in canonical rref.
  MatrixFp kernel() const;
  /// Some x with A x = b, if one exists.
  std::optional<VectorFp> solve(std::span<const std::uint32_t> b) const;
  std::optional<MatrixFp> inverse() const;

 private:
  void check_same_shape(const MatrixFp& o) const;
  void check_modulus(const MatrixFp& o) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> a_;
};

struct MatrixFp::Rref {
  MatrixFp reduced;
  std::vector<std::size_t> pivots;
};

inline bool is_zero_vector(std::span<const std::uint32_t> v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

VectorFp add_vectors(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p);
VectorFp scale_vector(std::span<const std::uint32_t> a, std::uint32_t c, std::uint32_t p);

}  // namespace galmod
