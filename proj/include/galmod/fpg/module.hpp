#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "galmod/algebra/matrix.hpp"
#include "galmod/fpg/group_algebra.hpp"

namespace galmod {

/// A finite-dimensional F_p[G]-module: F_p^dim with sigma acting on column
/// vectors.  Construction checks sigma^(p^n) = I and (sigma - I)^(p^n) = 0.
/// Copies share the immutable action matrix.
class FpGModule {
 public:
  FpGModule(const GroupContext& ctx, MatrixFp sigma);

  /// F_p[G] itself; sigma permutes the basis sigma^i -> sigma^(i+1).
  static FpGModule regular(const GroupContext& ctx);
  static FpGModule free(const GroupContext& ctx, std::size_t rank);
  /// dim copies of F_p with sigma = identity.
  static FpGModule trivial(const GroupContext& ctx, std::size_t dim);
  /// F_p[G]/(sigma - 1)^length as a unipotent Jordan block.
  static FpGModule jordan_block(const GroupContext& ctx, std::size_t length);

  const GroupContext& context() const { return d_->ctx; }
  std::uint32_t p() const { return d_->ctx.p(); }
  std::size_t dim() const { return d_->sigma.rows(); }
  const MatrixFp& sigma() const { return d_->sigma; }
  MatrixFp sigma_minus_one() const;
  VectorFp act(const VectorFp& v) const { return d_->sigma.apply(v); }
  /// Action of a group algebra element.
  VectorFp act(const GroupAlgebraElement& a, const VectorFp& v) const;

  /// Same module with sigma replaced by P sigma P^-1 (an isomorphic copy).
  FpGModule conjugated(const MatrixFp& change_of_basis) const;

  bool operator==(const FpGModule& o) const {
    return d_ == o.d_ || (d_->ctx == o.d_->ctx && d_->sigma == o.d_->sigma);
  }

 private:
  struct Data {
    GroupContext ctx;
    MatrixFp sigma;
  };
  std::shared_ptr<const Data> d_;
};

FpGModule direct_sum(const FpGModule& a, const FpGModule& b);

/// A sigma-stable subspace, held by its canonical rref basis so that
/// equality of submodules is equality of bases.
class Submodule {
 public:
  /// Rows must span a sigma-stable subspace; they are reduced to rref.
  Submodule(FpGModule parent, const MatrixFp& spanning_rows);

  static Submodule zero(const FpGModule& parent);
  static Submodule whole(const FpGModule& parent);

  const FpGModule& parent() const { return parent_; }
  const MatrixFp& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  bool contains(const VectorFp& v) const;
  bool contains(const Submodule& o) const;
  /// Coordinates of a member vector in the rref basis.
  VectorFp coordinates(const VectorFp& v) const;
  /// sigma restricted to this subspace.
  FpGModule as_module() const;

  bool operator==(const Submodule& o) const { return parent_ == o.parent_ && basis_ == o.basis_; }

 private:
  Submodule(FpGModule parent, MatrixFp rref_basis, std::vector<std::size_t> pivots)
      : parent_(std::move(parent)), basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {}

  FpGModule parent_;
  MatrixFp basis_;
  std::vector<std::size_t> pivots_;
  friend Submodule submodule_generated(const FpGModule&, const std::vector<VectorFp>&);
};

/// rank((sigma - 1)^i) for i = 0..p^n.
std::vector<std::size_t> rank_sequence(const FpGModule& m);
/// Lengths of the cyclic summands, largest first.
std::vector<std::size_t> decompose(const FpGModule& m);
inline std::vector<std::size_t> decompose(const Submodule& n) { return decompose(n.as_module()); }

bool is_free(const FpGModule& m, std::size_t rank);
inline bool is_free(const Submodule& n, std::size_t rank) { return is_free(n.as_module(), rank); }

/// Smallest sigma-stable subspace containing the vectors.
Submodule submodule_generated(const FpGModule& m, const std::vector<VectorFp>& vectors);
/// ker (sigma - 1)^e, 0 <= e <= p^n.
Submodule kernel_power(const FpGModule& m, std::size_t e);
/// (sigma - 1)^e M.
Submodule image_power(const FpGModule& m, std::size_t e);

/// Contragredient module: sigma acts on the dual space by (sigma^-1)^T.
FpGModule dual_module(const FpGModule& m);

/// 1 + sigma + ... + sigma^(p^n - 1) as a matrix on m.
MatrixFp norm_matrix(const FpGModule& m);
/// dim H^1(G, M) = dim ker N - rank(sigma - 1).
std::size_t cyclic_h1(const FpGModule& m);
/// dim H^2(G, M) = dim M^G - rank N.
std::size_t cyclic_h2(const FpGModule& m);

}  // namespace galmod
