#pragma once

#include "padic/lattice.hpp"
#include "padic/norm.hpp"
#include "padic/orthogonal.hpp"

namespace padic {

struct LvpResult {
  Vector vector;
  NormValue norm;
};

/// A lattice vector of maximal norm; its norm is the first successive maximum.
LvpResult lvp(const Lattice& lattice, const Norm& norm);

struct CvpResult {
  /// closest = B * coefficients.
  Vector closest;
  /// N(target - closest).
  NormValue distance;
  /// Integral coordinates of `closest` in the lattice's own basis.
  Vector coefficients;
  /// Smallest D >= 1 with p^(-D) * lambda_1 < distance (0 when the distance
  /// is zero): truncating coefficient digits beyond pi^D cannot change the
  /// optimum. For cvp_bruteforce this is the enumeration depth.
  int certified_depth = 0;
};

/// Exact closest vector.
///
/// Targets in span(L) are written in a certified N-orthogonal basis and
/// rounded coordinatewise to their integral parts. Other targets are first
/// projected: the residual t' = t - sum y_i alpha_i is driven down by the
/// orthogonality criterion until (alpha_1..alpha_n, t') is N-orthogonal,
/// which makes y a best approximation from the span; then y is rounded.
CvpResult cvp(const Lattice& lattice, const Norm& norm, const Vector& target);
/// Same, reusing an orthogonal basis of `lattice` computed earlier.
CvpResult cvp(const Lattice& lattice, const OrthogonalBasis& ortho, const Norm& norm, const Vector& target);

/// Exhaustive minimum of N(t - B x) over all x in O_k^n whose pi-adic digits
/// vanish from pi^depth on. Ties go to the lexicographically smallest digit
/// sequence, read level by level. Subtrees whose value is already fixed by
/// the ultrametric inequality are evaluated once instead of enumerated.
CvpResult cvp_bruteforce(const Lattice& lattice, const Norm& norm, const Vector& target, int depth);

/// p^(-depth) * lambda_1 < distance: a depth-`depth` enumeration is exact.
bool depth_sufficient(int depth, const NormValue& lambda1, const NormValue& distance);

/// max_i N(b_i) over the basis columns, which equals the largest norm in L.
NormValue max_basis_norm(const Lattice& lattice, const Norm& norm);

}  // namespace padic
