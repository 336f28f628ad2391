#include "padic/lattice.hpp"

#include "padic/errors.hpp"

namespace padic {

Lattice::Lattice(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.cols() == 0 || basis_.rows() == 0) throw MathError("lattice basis must be nonempty");
  if (basis_.cols() > basis_.rows()) throw MathError("lattice rank exceeds the ambient dimension");
  if (padic::rank(basis_) != basis_.cols()) throw MathError("lattice basis columns are linearly dependent");
}

std::optional<Vector> member(const Lattice& lattice, const Vector& v) {
  auto coeffs = try_solve(lattice.basis(), v);
  if (!coeffs) return std::nullopt;
  for (const auto& c : *coeffs) {
    if (!c.is_integral()) return std::nullopt;
  }
  return coeffs;
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (!a.field().same_field(b.field()) || a.rank() != b.rank() || a.dimension() != b.dimension()) return false;
  // b = a C, column by column.
  std::vector<Vector> cols;
  cols.reserve(b.rank());
  for (std::size_t j = 0; j < b.rank(); ++j) {
    auto c = try_solve(a.basis(), b.basis_vector(j));
    if (!c) return false;
    cols.push_back(std::move(*c));
  }
  return is_unimodular(Matrix::from_columns(cols));
}

NormValue determinant(const Lattice& lattice) {
  const Matrix& b = lattice.basis();
  return det(b.transpose() * b).abs().root(2);
}

Matrix dual_basis(const Matrix& basis) {
  if (padic::rank(basis) != basis.cols()) throw MathError("dual basis of dependent columns");
  const Matrix gram = basis.transpose() * basis;
  // Over F_p((T)) a span can be isotropic for the dot product (e.g. (1,1)
  // over F_2), and then no dual basis inside span(B) exists.
  if (det(gram).is_zero()) throw MathError("B^t B is singular: the span is degenerate for the dot product");
  return basis * inverse(gram);
}

Lattice dual(const Lattice& lattice) { return Lattice(dual_basis(lattice.basis())); }

Lattice scaled(const Lattice& lattice, const Scalar& x) {
  if (x.is_zero()) throw MathError("scaling a lattice by zero");
  return Lattice(x * lattice.basis());
}

}  // namespace padic
