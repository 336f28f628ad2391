#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "padic/lattice.hpp"
#include "padic/norm.hpp"

namespace padic {

/// A witness that a family of vectors is not N-orthogonal.
///
/// The vectors are grouped by the coset of their norm in p^Q / p^Z. Inside
/// the offending group every member v_i was rescaled to pi^shift_i v_i so
/// that all members share `group_norm`; `combination` is
/// sum digit_i * pi^shift_i * v_i and has norm strictly below it.
/// Entries of `digits` and `shifts` outside the group are zero.
struct OrthogonalityViolation {
  std::vector<std::uint64_t> digits;
  std::vector<std::int64_t> shifts;
  Vector combination;
  NormValue norm;
  NormValue group_norm;
};

/// Runs the finite orthogonality criterion on independent vectors and
/// returns the lexicographically smallest violating digit tuple (groups in
/// order of their first member). nullopt means the family is N-orthogonal.
std::optional<OrthogonalityViolation> find_violation(std::span<const Vector> vectors, const Norm& norm);

/// Throws MathError on dependent vectors.
bool is_orthogonal(std::span<const Vector> vectors, const Norm& norm);

struct OrthogonalBasis {
  /// Basis of the input lattice, sorted by descending norm.
  std::vector<Vector> vectors;
  /// maxima[i] = N(vectors[i]), descending.
  std::vector<NormValue> maxima;
  bool certified = false;
  /// Product of the basis norms before each replacement and at the end;
  /// strictly decreasing.
  std::vector<NormValue> norm_products;
  std::size_t replacements = 0;
};

/// Greedy descent: while the criterion finds a violation, replace the
/// basis vector that carries a unit coefficient (the largest such index)
/// by the rescaled violating combination. The result spans the same
/// O_k-module.
OrthogonalBasis orthogonalize(const Lattice& lattice, const Norm& norm);

/// The successive maxima of the lattice: descending basis norms of any
/// N-orthogonal basis.
std::vector<NormValue> successive_maxima(const Lattice& lattice, const Norm& norm);

}  // namespace padic
