#include "padic/cvp.hpp"

#include <algorithm>
#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

namespace {

int certify_depth(const NormValue& lambda1, const NormValue& distance) {
  if (distance.is_zero()) return 0;
  const Exponent gap = distance.order() - lambda1.order();
  // smallest D >= 1 with lambda1.order + D > distance.order
  const std::int64_t n = gap.numerator();
  const std::int64_t d = gap.denominator();
  const std::int64_t fl = n >= 0 ? n / d : -((-n + d - 1) / d);
  return static_cast<int>(std::max<std::int64_t>(1, fl + 1));
}

// Rounds coordinates y over the orthogonal basis to their integral parts.
CvpResult round_in_basis(const Lattice& lattice, const OrthogonalBasis& ortho, const Vector& y,
                         const NormValue& residual, const Norm& norm, const Vector& target) {
  const FieldConfig& f = lattice.field();
  CvpResult out;
  out.closest = zero_vector(f, lattice.dimension());
  out.distance = residual;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const IntegralSplit split = split_integral(y[i]);
    axpy(out.closest, split.integral, ortho.vectors[i]);
    if (!split.principal.is_zero()) out.distance = std::max(out.distance, y[i].abs() * ortho.maxima[i]);
  }
  out.coefficients = solve(lattice.basis(), out.closest);
  if (norm.eval(target - out.closest) != out.distance) {
    throw std::logic_error("cvp: rounded distance disagrees with the direct evaluation");
  }
  out.certified_depth = certify_depth(ortho.maxima.front(), out.distance);
  return out;
}

class DigitSearch {
 public:
  DigitSearch(const Lattice& lattice, const Norm& norm, int depth)
      : norm_(norm), depth_(depth), field_(lattice.field()), basis_(lattice.basis_vectors()),
        lambda1_(max_basis_norm(lattice, norm)) {
    for (std::uint64_t d = 0; d < field_.p; ++d) digits_.push_back(Scalar::from_integer(field_, static_cast<long long>(d)));
  }

  CvpResult run(const Vector& target) {
    Vector coeffs = zero_vector(field_, basis_.size());
    visit(0, target, coeffs);
    CvpResult out;
    out.coefficients = best_coeffs_;
    out.distance = best_;
    out.closest = target - best_residual_;
    out.certified_depth = depth_;
    return out;
  }

 private:
  void record(const NormValue& value, const Vector& residual, const Vector& coeffs) {
    if (found_ && !(value < best_)) return;
    found_ = true;
    best_ = value;
    best_residual_ = residual;
    best_coeffs_ = coeffs;
  }

  // Node at `level`: digits below pi^level are fixed, residual = t - B x.
  void visit(int level, const Vector& residual, const Vector& coeffs) {
    if (found_ && best_.is_zero()) return;
    const NormValue value = norm_.eval(residual);
    // Remaining digits move B x by at most p^(-level) * lambda1.
    if (level == depth_ || value.is_zero() || value > NormValue::pi_power(level) * lambda1_) {
      record(value, residual, coeffs);
      return;
    }
    std::vector<Vector> step;
    for (const auto& b : basis_) step.push_back(shifted(b, level));
    children(level, 0, step, residual, coeffs);
  }

  void children(int level, std::size_t index, const std::vector<Vector>& step, const Vector& residual,
                const Vector& coeffs) {
    if (index == basis_.size()) {
      visit(level + 1, residual, coeffs);
      return;
    }
    for (std::size_t d = 0; d < digits_.size(); ++d) {
      if (found_ && best_.is_zero()) return;
      if (d == 0) {
        children(level, index + 1, step, residual, coeffs);
        continue;
      }
      Vector r = residual;
      axpy(r, -digits_[d], step[index]);
      Vector c = coeffs;
      c[index] += digits_[d].shifted(level);
      children(level, index + 1, step, r, c);
    }
  }

  const Norm& norm_;
  int depth_;
  FieldConfig field_;
  std::vector<Vector> basis_;
  NormValue lambda1_;
  std::vector<Scalar> digits_;
  bool found_ = false;
  NormValue best_;
  Vector best_residual_;
  Vector best_coeffs_;
};

}  // namespace

NormValue max_basis_norm(const Lattice& lattice, const Norm& norm) {
  NormValue best = NormValue::zero();
  for (std::size_t i = 0; i < lattice.rank(); ++i) best = std::max(best, norm.eval(lattice.basis_vector(i)));
  return best;
}

bool depth_sufficient(int depth, const NormValue& lambda1, const NormValue& distance) {
  return NormValue::pi_power(depth) * lambda1 < distance;
}

LvpResult lvp(const Lattice& lattice, const Norm& norm) {
  OrthogonalBasis ortho = orthogonalize(lattice, norm);
  return {ortho.vectors.front(), ortho.maxima.front()};
}

CvpResult cvp(const Lattice& lattice, const Norm& norm, const Vector& target) {
  return cvp(lattice, orthogonalize(lattice, norm), norm, target);
}

CvpResult cvp(const Lattice& lattice, const OrthogonalBasis& ortho, const Norm& norm, const Vector& target) {
  if (target.size() != lattice.dimension()) throw MathError("cvp: target has the wrong dimension");
  const FieldConfig& f = lattice.field();
  const Matrix alpha = Matrix::from_columns(ortho.vectors);

  if (auto y = try_solve(alpha, target)) return round_in_basis(lattice, ortho, *y, NormValue::zero(), norm, target);

  // Out of span: make (alpha, residual) N-orthogonal without touching alpha.
  const std::size_t n = ortho.vectors.size();
  std::vector<Vector> family = ortho.vectors;
  family.push_back(target);
  Vector y = zero_vector(f, n);
  while (auto v = find_violation(family, norm)) {
    const std::uint64_t lead = v->digits[n];
    if (lead == 0) throw std::logic_error("cvp: violation inside an orthogonal basis");
    const Scalar lead_inv = Scalar::from_integer(f, static_cast<long long>(lead)).inverse();
    const std::int64_t k = v->shifts[n];
    for (std::size_t i = 0; i < n; ++i) {
      if (v->digits[i] == 0) continue;
      y[i] -= Scalar::from_integer(f, static_cast<long long>(v->digits[i])).shifted(v->shifts[i] - k) * lead_inv;
    }
    family[n] = lead_inv * shifted(v->combination, -k);
  }
  return round_in_basis(lattice, ortho, y, norm.eval(family[n]), norm, target);
}

CvpResult cvp_bruteforce(const Lattice& lattice, const Norm& norm, const Vector& target, int depth) {
  if (depth < 1) throw MathError("cvp_bruteforce: depth must be at least 1");
  if (target.size() != lattice.dimension()) throw MathError("cvp_bruteforce: target has the wrong dimension");
  return DigitSearch(lattice, norm, depth).run(target);
}

}  // namespace padic
