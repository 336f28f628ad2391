#pragma once

#include <optional>

#include "padic/linalg.hpp"

namespace padic {

/// The O_k-module L(B) = { B x : x in O_k^n } spanned by the independent
/// columns of an m x n basis matrix B.
///
/// A Lattice keeps the basis it was built from. Two lattices with different
/// bases can still be equal; compare them with same_lattice.
class Lattice {
 public:
  /// Throws MathError when the columns of `basis` are dependent.
  explicit Lattice(Matrix basis);

  const Matrix& basis() const { return basis_; }
  const FieldConfig& field() const { return basis_.field(); }
  std::size_t rank() const { return basis_.cols(); }
  std::size_t dimension() const { return basis_.rows(); }
  Vector basis_vector(std::size_t i) const { return basis_.column(i); }
  std::vector<Vector> basis_vectors() const { return basis_.columns(); }

 private:
  Matrix basis_;
};

/// Coefficients c in O_k^n with B c = v, or nullopt when v is not in L
/// (outside the span, or some coefficient non-integral).
std::optional<Vector> member(const Lattice& lattice, const Vector& v);

/// Equal spans and a unimodular change of basis.
bool same_lattice(const Lattice& a, const Lattice& b);

/// |det(B^t B)|^(1/2), independent of the chosen basis.
NormValue determinant(const Lattice& lattice);

/// D = B (B^t B)^(-1): the basis of span(B) with B^t D = I_n.
Matrix dual_basis(const Matrix& basis);

/// The lattice on the dual basis, i.e. all y in span(L) with y . x in O_k
/// for every x in L.
Lattice dual(const Lattice& lattice);

/// L(x B) for a nonzero scalar x.
Lattice scaled(const Lattice& lattice, const Scalar& x);

}  // namespace padic
