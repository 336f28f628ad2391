#include "padic/minkowski.hpp"

#include <algorithm>

#include "padic/errors.hpp"

namespace padic {

namespace {

NormValue product(const std::vector<NormValue>& values) {
  NormValue p = NormValue::one();
  for (const auto& v : values) p *= v;
  return p;
}

InequalityRecord make(std::string name, std::string label, NormValue left, NormValue constant, NormValue bound) {
  InequalityRecord r;
  r.name = std::move(name);
  r.norm_label = std::move(label);
  r.left = left;
  r.constant = constant;
  r.right = constant * bound;
  r.pass = r.left >= r.right;
  return r;
}

}  // namespace

EquivConstants equiv_constants(const Norm& norm, const FieldConfig& field, std::size_t m) {
  if (m == 0) throw MathError("equiv_constants: dimension must be positive");
  if (const auto d = norm.dimension(); d && *d != m) {
    throw MathError("equiv_constants: norm lives in dimension " + std::to_string(*d) + ", not " + std::to_string(m));
  }
  EquivConstants out;
  out.max_basis_norm = NormValue::zero();
  for (std::size_t i = 0; i < m; ++i) out.max_basis_norm = std::max(out.max_basis_norm, norm.eval(unit_vector(field, m, i)));
  out.c1 = out.max_basis_norm.inverse();

  if (m == 1) {
    // N(v) = N(e_1) |v_1| = N(e_1) M(v).
    out.per_basis_distances.push_back(out.max_basis_norm);
  } else {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Vector> others;
      for (std::size_t i = 0; i < m; ++i) {
        if (i != j) others.push_back(unit_vector(field, m, i));
      }
      const Lattice sub(Matrix::from_columns(others));
      out.per_basis_distances.push_back(cvp(sub, norm, unit_vector(field, m, j)).distance);
    }
  }
  const NormValue c = *std::min_element(out.per_basis_distances.begin(), out.per_basis_distances.end());
  out.c2 = c.inverse();
  return out;
}

LatticeProfile LatticeProfile::compute(const Lattice& lattice, const Norm& norm) {
  Lattice d = padic::dual(lattice);
  OrthogonalBasis o = orthogonalize(lattice, norm);
  OrthogonalBasis od = orthogonalize(d, norm);
  const NormValue det_l = determinant(lattice);
  const NormValue det_d = determinant(d);
  return LatticeProfile{lattice, std::move(d), std::move(o), std::move(od), det_l, det_d};
}

InequalityRecord minkowski_first(const LatticeProfile& prof, const EquivConstants& consts, std::string label) {
  const auto n = static_cast<std::int64_t>(prof.lattice.rank());
  return make("minkowski_first", std::move(label), prof.ortho.maxima.front(), consts.kappa(), prof.det.root(n));
}

InequalityRecord transference_first(const LatticeProfile& prof, const EquivConstants& consts, std::string label) {
  return make("transference_first", std::move(label), prof.ortho.maxima.front() * prof.dual_ortho.maxima.front(),
              consts.kappa().pow(2), NormValue::one());
}

InequalityRecord transference_maxima(const LatticeProfile& prof, const EquivConstants& consts, std::string label) {
  return make("transference_maxima", std::move(label), prof.ortho.maxima.front() * prof.dual_ortho.maxima.back(),
              consts.c_prime(), NormValue::one());
}

InequalityRecord minkowski_second(const LatticeProfile& prof, const EquivConstants& consts, std::string label) {
  return make("minkowski_second", std::move(label), product(prof.ortho.maxima),
              consts.c_double_prime(prof.lattice.rank()), prof.det);
}

InequalityRecord corollary_products(const LatticeProfile& prof, const EquivConstants& consts, std::string label) {
  return make("corollary_products", std::move(label), product(prof.ortho.maxima) * product(prof.dual_ortho.maxima),
              consts.c_double_prime(prof.lattice.rank()).pow(2), NormValue::one());
}

InequalityRecord minkowski_first(const Lattice& l, const Norm& n, const EquivConstants& consts) {
  return minkowski_first(LatticeProfile::compute(l, n), consts);
}
InequalityRecord transference_first(const Lattice& l, const Norm& n, const EquivConstants& consts) {
  return transference_first(LatticeProfile::compute(l, n), consts);
}
InequalityRecord transference_maxima(const Lattice& l, const Norm& n, const EquivConstants& consts) {
  return transference_maxima(LatticeProfile::compute(l, n), consts);
}
InequalityRecord minkowski_second(const Lattice& l, const Norm& n, const EquivConstants& consts) {
  return minkowski_second(LatticeProfile::compute(l, n), consts);
}
InequalityRecord corollary_products(const Lattice& l, const Norm& n, const EquivConstants& consts) {
  return corollary_products(LatticeProfile::compute(l, n), consts);
}

bool VerificationReport::passed() const {
  return std::all_of(inequalities.begin(), inequalities.end(), [](const auto& r) { return r.pass; }) &&
         std::all_of(invariants.begin(), invariants.end(), [](const auto& r) { return r.pass; });
}

VerificationReport verify(const Lattice& lattice, const Norm& norm) {
  return verify(lattice, norm, equiv_constants(norm, lattice.field(), lattice.dimension()));
}

VerificationReport verify(const Lattice& lattice, const Norm& norm, const EquivConstants& consts) {
  const FieldConfig& f = lattice.field();
  VerificationReport report;
  report.field = f;
  report.rank = lattice.rank();
  report.dimension = lattice.dimension();
  report.constants = consts;

  const Norm sup = Norm::sup();
  const EquivConstants sup_consts = equiv_constants(sup, f, lattice.dimension());
  const LatticeProfile m_prof = LatticeProfile::compute(lattice, sup);
  const bool sup_is_n = norm.kind() == NormKind::Sup;
  const LatticeProfile n_prof = sup_is_n ? m_prof : LatticeProfile::compute(lattice, norm);

  report.maxima = n_prof.ortho.maxima;
  report.dual_maxima = n_prof.dual_ortho.maxima;
  report.det = n_prof.det;
  report.dual_det = n_prof.dual_det;

  using Check = InequalityRecord (*)(const LatticeProfile&, const EquivConstants&, std::string);
  const Check checks[] = {minkowski_first, transference_first, transference_maxima, minkowski_second,
                          corollary_products};
  for (Check check : checks) {
    report.inequalities.push_back(check(m_prof, sup_consts, "M"));
    report.inequalities.push_back(check(n_prof, consts, "N"));
  }
  // The maxima transference also holds with L* in the role of L.
  const LatticeProfile swapped{n_prof.dual, n_prof.lattice, n_prof.dual_ortho, n_prof.ortho, n_prof.dual_det, n_prof.det};
  InequalityRecord rec = transference_maxima(swapped, consts, "N");
  rec.name = "transference_maxima_dual";
  report.inequalities.push_back(rec);

  const Matrix& b = lattice.basis();
  const Matrix& d = n_prof.dual.basis();
  report.invariants.push_back({"dual_identity", b.transpose() * d == Matrix::identity(f, lattice.rank()), "B^t D = I"});
  report.invariants.push_back({"double_dual", same_lattice(dual(n_prof.dual), lattice), "(L*)* = L"});
  report.invariants.push_back({"det_reciprocity", n_prof.det * n_prof.dual_det == NormValue::one(),
                               "det(L) det(L*) = " + (n_prof.det * n_prof.dual_det).to_string(f.p)});
  return report;
}

}  // namespace padic
