#pragma once

#include <string>
#include <vector>

#include "padic/cvp.hpp"
#include "padic/lattice.hpp"
#include "padic/norm.hpp"
#include "padic/orthogonal.hpp"

namespace padic {

/// Constants with c1 N(v) <= M(v) <= c2 N(v) on k^m, where M is the sup norm.
///
/// c1 = 1 / max_i N(e_i). c2 = 1 / c with c the smallest CVP distance from
/// a standard basis vector e_j to the lattice on the other m - 1 of them.
struct EquivConstants {
  NormValue c1;
  NormValue c2;
  /// dist(e_j, L(e_i : i != j)) for j = 1..m.
  std::vector<NormValue> per_basis_distances;
  NormValue max_basis_norm;

  /// Constant of the first Minkowski bound for N: 1 / c2.
  NormValue kappa() const { return c2.inverse(); }
  /// Constant of the maxima transference bound: 1 / c2^2.
  NormValue c_prime() const { return kappa().pow(2); }
  /// Constant of the second Minkowski bound in rank n: 1 / c2^n.
  NormValue c_double_prime(std::size_t n) const { return kappa().pow(static_cast<std::int64_t>(n)); }
};

/// Solves the m CVP instances. Throws MathError if the norm has a fixed
/// dimension other than m.
EquivConstants equiv_constants(const Norm& norm, const FieldConfig& field, std::size_t m);

/// Everything the inequality checks need about one lattice under one norm.
struct LatticeProfile {
  Lattice lattice;
  Lattice dual;
  OrthogonalBasis ortho;
  OrthogonalBasis dual_ortho;
  NormValue det;
  NormValue dual_det;

  static LatticeProfile compute(const Lattice& lattice, const Norm& norm);
};

/// One inequality left >= right, where right = constant * (bound term).
struct InequalityRecord {
  std::string name;
  /// "M" for the sup norm form, "N" for the general form.
  std::string norm_label;
  NormValue left;
  NormValue right;
  NormValue constant;
  bool pass = false;
};

InequalityRecord minkowski_first(const LatticeProfile& prof, const EquivConstants& consts, std::string label = "N");
InequalityRecord transference_first(const LatticeProfile& prof, const EquivConstants& consts, std::string label = "N");
InequalityRecord transference_maxima(const LatticeProfile& prof, const EquivConstants& consts, std::string label = "N");
InequalityRecord minkowski_second(const LatticeProfile& prof, const EquivConstants& consts, std::string label = "N");
InequalityRecord corollary_products(const LatticeProfile& prof, const EquivConstants& consts, std::string label = "N");

InequalityRecord minkowski_first(const Lattice& l, const Norm& n, const EquivConstants& consts);
InequalityRecord transference_first(const Lattice& l, const Norm& n, const EquivConstants& consts);
InequalityRecord transference_maxima(const Lattice& l, const Norm& n, const EquivConstants& consts);
InequalityRecord minkowski_second(const Lattice& l, const Norm& n, const EquivConstants& consts);
InequalityRecord corollary_products(const Lattice& l, const Norm& n, const EquivConstants& consts);

struct InvariantRecord {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  FieldConfig field;
  std::size_t rank = 0;
  std::size_t dimension = 0;
  EquivConstants constants;
  std::vector<NormValue> maxima;
  std::vector<NormValue> dual_maxima;
  NormValue det;
  NormValue dual_det;
  std::vector<InequalityRecord> inequalities;
  std::vector<InvariantRecord> invariants;

  bool passed() const;
};

/// All five inequalities in their sup-norm form and in the N form (with
/// `consts` for N), the maxima transference with the roles of L and L*
/// swapped, and the duality invariants B^t D = I, (L*)* = L and
/// det(L*) det(L) = 1.
VerificationReport verify(const Lattice& lattice, const Norm& norm, const EquivConstants& consts);
/// Computes the constants first.
VerificationReport verify(const Lattice& lattice, const Norm& norm);

}  // namespace padic
