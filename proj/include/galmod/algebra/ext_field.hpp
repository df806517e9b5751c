#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "galmod/algebra/matrix.hpp"
#include "galmod/algebra/prime_field.hpp"

namespace galmod {

class ExtFieldElement;

/// Dense polynomials over F_p as coefficient vectors, constant term first.
/// These back the choice of defining polynomials; general polynomial
/// arithmetic over extension fields lives in Poly.
namespace fp_poly {

void trim(VectorFp& a);
VectorFp mul(const VectorFp& a, const VectorFp& b, std::uint32_t p);
VectorFp mod(const VectorFp& a, const VectorFp& m, std::uint32_t p);
VectorFp gcd(VectorFp a, VectorFp b, std::uint32_t p);
/// x^(p^e) mod m.
VectorFp frobenius_power_of_x(std::uint64_t e, const VectorFp& m, std::uint32_t p);
/// Rabin's test; `monic` includes the leading 1.
bool is_irreducible(const VectorFp& monic, std::uint32_t p);

}  // namespace fp_poly

/// Context for F_{p^m} = F_p[g]/(f) with f the monic irreducible of degree m
/// whose lower coefficients (c_0 + c_1 p + ... + c_{m-1} p^{m-1}) form the
/// smallest integer.  Cheap to copy; all copies share one immutable table.
class ExtField {
 public:
  static ExtField make(std::uint32_t p, std::uint32_t m);

  std::uint32_t characteristic() const { return data_->p; }
  std::uint32_t degree() const { return data_->m; }
  std::uint64_t size() const { return data_->size; }
  /// Coefficients of the defining polynomial, constant first, leading 1 last.
  const VectorFp& modulus() const { return data_->modulus; }
  /// F_p-matrix of x -> x^p in the basis 1, g, ..., g^(m-1).
  const MatrixFp& frobenius_matrix() const { return data_->frobenius; }

  ExtFieldElement zero() const;
  ExtFieldElement one() const;
  /// The class of g.  For m = 1 with f = x this is 0.
  ExtFieldElement generator() const;
  ExtFieldElement from_int(std::int64_t v) const;
  ExtFieldElement from_coeffs(const VectorFp& c) const;
  /// Inverse of ExtFieldElement::index().
  ExtFieldElement from_index(std::uint64_t index) const;

  bool operator==(const ExtField& o) const;

 private:
  struct Data {
    std::uint32_t p;
    std::uint32_t m;
    std::uint64_t size;
    VectorFp modulus;
    MatrixFp frobenius;
    VectorFp basis_traces;
  };
  explicit ExtField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
  friend class ExtFieldElement;
};

ExtField make_ext_field(std::uint32_t p, std::uint32_t m);

/// Element of F_{p^m} in the polynomial basis of its context.
class ExtFieldElement {
 public:
  const ExtField& field() const { return field_; }
  const VectorFp& coeffs() const { return c_; }
  PrimeFieldElement coeff(std::size_t i) const { return {c_.at(i), field_.characteristic()}; }

  bool is_zero() const { return is_zero_vector(c_); }
  bool is_one() const;
  bool in_prime_field() const;
  /// Value of an element of the prime subfield.
  std::uint32_t prime_value() const;
  /// Base-p integer encoding; also defines the lexicographic order.
  std::uint64_t index() const;

  ExtFieldElement operator+(const ExtFieldElement& o) const;
  ExtFieldElement operator-(const ExtFieldElement& o) const;
  ExtFieldElement operator*(const ExtFieldElement& o) const;
  ExtFieldElement operator/(const ExtFieldElement& o) const;
  ExtFieldElement operator-() const;
  ExtFieldElement& operator+=(const ExtFieldElement& o) { return *this = *this + o; }
  ExtFieldElement& operator-=(const ExtFieldElement& o) { return *this = *this - o; }
  ExtFieldElement& operator*=(const ExtFieldElement& o) { return *this = *this * o; }
  ExtFieldElement scaled(std::uint32_t c) const;
  ExtFieldElement inverse() const;
  ExtFieldElement pow(std::uint64_t e) const;

  ExtFieldElement frobenius() const;
  /// frobenius applied `times` times, reduced mod the degree.
  ExtFieldElement frobenius_pow(std::uint64_t times) const;
  /// Unique p-th root (Frobenius is bijective on a finite field).
  ExtFieldElement pth_root() const { return frobenius_pow(field_.degree() - 1); }
  PrimeFieldElement trace() const;
  /// Size of the Frobenius orbit, i.e. the degree of the element over F_p.
  std::uint32_t orbit_size() const;

  /// Polynomial in the generator, e.g. "g^2+2*g+1"; prime field values print as integers.
  std::string to_string() const;

  bool operator==(const ExtFieldElement& o) const { return c_ == o.c_ && field_ == o.field_; }
  bool operator<(const ExtFieldElement& o) const { return index() < o.index(); }

 private:
  ExtFieldElement(ExtField f, VectorFp c) : field_(std::move(f)), c_(std::move(c)) {}
  void check_same(const ExtFieldElement& o) const;

  ExtField field_;
  VectorFp c_;
  friend class ExtField;
};

inline ExtFieldElement frobenius(const ExtFieldElement& x) { return x.frobenius(); }
inline PrimeFieldElement trace_to_prime(const ExtFieldElement& x) { return x.trace(); }

std::ostream& operator<<(std::ostream& os, const ExtFieldElement& x);

/// All field elements in index order.  Refuses fields above `max_size`.
std::vector<ExtFieldElement> all_elements(const ExtField& f, std::uint64_t max_size = 1u << 20);

/// Image of the generator of `small` inside `big`: the lexicographically
/// smallest root there of small's defining polynomial.  Requires
/// degree(small) | degree(big) and big.size() <= max_size.
ExtFieldElement embedding_root(const ExtField& small, const ExtField& big, std::uint64_t max_size = 1u << 20);

/// Map x = sum c_i g^i to sum c_i root^i.
ExtFieldElement embed(const ExtFieldElement& x, const ExtFieldElement& root);

}  // namespace galmod
