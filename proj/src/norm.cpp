#include "padic/norm.hpp"

#include <algorithm>

#include "padic/errors.hpp"

namespace padic {

namespace {

// Fraction-free (Bareiss) elimination over Z or F_p[T]. Returns the last
// pivot, which is the determinant up to sign; zero when singular.
template <typename Ring, typename ExactDiv>
Ring bareiss(std::vector<std::vector<Ring>> a, const Ring& one, ExactDiv div) {
  const std::size_t n = a.size();
  const Ring zero = Ring(one - one);
  Ring prev = one;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == zero) ++piv;
    if (piv == n) return zero;
    std::swap(a[k], a[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    }
    prev = a[k][k];
  }
  return prev;
}

// Valuation of det(a) without rational arithmetic: clear each row's
// denominators, then eliminate fraction-free.
Valuation det_valuation(const Matrix& a) {
  const FieldConfig& f = a.field();
  const std::size_t n = a.rows();
  std::int64_t shift = 0;
  if (f.kind == FieldKind::Qp) {
    const mpz_class p(static_cast<unsigned long>(f.p));
    auto val = [&](mpz_class z) {
      return static_cast<std::int64_t>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
    };
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t r = 0; r < n; ++r) {
      mpz_class l = 1;
      for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).rational().get_den_mpz_t());
      shift += val(l);
      for (std::size_t c = 0; c < n; ++c) {
        const mpq_class& x = a(r, c).rational();
        m[r][c] = x.get_num() * (l / x.get_den());
      }
    }
    const mpz_class d = bareiss(std::move(m), mpz_class(1), [](const mpz_class& x, const mpz_class& y) {
      mpz_class out;
      mpz_divexact(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      return out;
    });
    if (d == 0) return Valuation::infinity();
    return Valuation::finite(val(d) - shift);
  }
  std::vector<std::vector<FpPoly>> m(n, std::vector<FpPoly>(n, FpPoly(f.p)));
  for (std::size_t r = 0; r < n; ++r) {
    FpPoly l = FpPoly::constant(f.p, 1);
    for (std::size_t c = 0; c < n; ++c) {
      const FpPoly& den = a(r, c).denominator_poly();
      l = FpPoly::divmod(l * den, FpPoly::gcd(l, den)).first;
    }
    shift += l.order();
    for (std::size_t c = 0; c < n; ++c) {
      m[r][c] = a(r, c).numerator_poly() * FpPoly::divmod(l, a(r, c).denominator_poly()).first;
    }
  }
  const FpPoly d = bareiss(std::move(m), FpPoly::constant(f.p, 1),
                           [](const FpPoly& x, const FpPoly& y) { return FpPoly::divmod(x, y).first; });
  if (d.is_zero()) return Valuation::infinity();
  return Valuation::finite(d.order() - shift);
}

}  // namespace

Norm Norm::sup() { return Norm{}; }

Norm Norm::weighted_sup(std::vector<NormValue> weights) {
  if (weights.empty()) throw MathError("weighted sup norm needs at least one weight");
  for (const auto& w : weights) {
    if (w.is_zero()) throw MathError("weighted sup norm weights must be positive");
  }
  Norm n;
  n.kind_ = NormKind::WeightedSup;
  n.weights_ = std::move(weights);
  return n;
}

Norm Norm::extension(std::vector<Scalar> min_poly) {
  if (min_poly.size() < 2) throw MathError("extension polynomial must have degree at least 1");
  const FieldConfig& f = min_poly.front().field();
  for (const auto& c : min_poly) {
    if (!c.field().same_field(f)) throw MathError("extension polynomial mixes fields");
  }
  if (!min_poly.back().is_one()) throw MathError("extension polynomial must be monic");
  Norm n;
  n.kind_ = NormKind::Extension;
  n.certified_ = reduction_irreducible(min_poly);
  n.min_poly_ = std::move(min_poly);
  return n;
}

std::optional<std::size_t> Norm::dimension() const {
  switch (kind_) {
    case NormKind::Sup:
      return std::nullopt;
    case NormKind::WeightedSup:
      return weights_.size();
    case NormKind::Extension:
      return min_poly_.size() - 1;
  }
  return std::nullopt;
}

NormValue Norm::eval(const Vector& v) const {
  if (v.empty()) throw MathError("norm of an empty vector");
  if (const auto d = dimension(); d && *d != v.size()) {
    throw MathError("norm expects dimension " + std::to_string(*d) + ", got " + std::to_string(v.size()));
  }
  switch (kind_) {
    case NormKind::Sup: {
      NormValue best = NormValue::zero();
      for (const auto& x : v) best = std::max(best, x.abs());
      return best;
    }
    case NormKind::WeightedSup: {
      NormValue best = NormValue::zero();
      for (std::size_t i = 0; i < v.size(); ++i) best = std::max(best, weights_[i] * v[i].abs());
      return best;
    }
    case NormKind::Extension: {
      if (is_zero(v)) return NormValue::zero();
      const Valuation val = det_valuation(multiplication_matrix(v, min_poly_));
      if (val.is_infinite()) return NormValue::zero();
      return NormValue::from_order(Exponent(val.value(), static_cast<std::int64_t>(v.size())));
    }
  }
  return NormValue::zero();
}

std::string Norm::describe(const FieldConfig& f) const {
  switch (kind_) {
    case NormKind::Sup:
      return "sup";
    case NormKind::WeightedSup: {
      std::string s = "weighted sup (";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ", ";
        s += weights_[i].to_string(f.p);
      }
      return s + ")";
    }
    case NormKind::Extension: {
      std::string s = "extension x^" + std::to_string(min_poly_.size() - 1);
      for (std::size_t i = min_poly_.size() - 1; i-- > 0;) {
        if (min_poly_[i].is_zero()) continue;
        s += " + (" + min_poly_[i].to_string() + ")";
        if (i > 0) s += "x" + (i > 1 ? "^" + std::to_string(i) : std::string());
      }
      return s + (certified_ ? " [unramified]" : " [uncertified]");
    }
  }
  return "?";
}

Matrix multiplication_matrix(const Vector& v, std::span<const Scalar> min_poly) {
  const std::size_t m = min_poly.size() - 1;
  if (v.size() != m) throw MathError("multiplication matrix: vector length differs from the degree");
  const FieldConfig& f = min_poly.front().field();
  Matrix mat(f, m, m);
  Vector cur = v;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) mat(i, j) = cur[i];
    // cur <- cur * x mod f, using x^m = -sum f_i x^i
    const Scalar top = cur[m - 1];
    for (std::size_t i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = Scalar::zero(f);
    if (!top.is_zero()) {
      for (std::size_t i = 0; i < m; ++i) {
        if (!min_poly[i].is_zero()) cur[i] -= top * min_poly[i];
      }
    }
  }
  return mat;
}

bool reduction_irreducible(std::span<const Scalar> min_poly) {
  if (min_poly.size() < 2) return false;
  const std::uint64_t p = min_poly.front().field().p;
  std::vector<std::uint64_t> residues;
  for (const auto& c : min_poly) {
    if (!c.is_integral()) return false;
    residues.push_back(c.residue());
  }
  return FpPoly(p, std::move(residues)).is_irreducible();
}

AxiomReport axiom_check(const Norm& norm, std::span<const Vector> samples) {
  AxiomReport report;
  if (samples.empty()) return report;
  const FieldConfig f = samples.front().front().field();
  auto fail = [&](int axiom, std::string msg) {
    report.passed = false;
    report.failed_axiom = axiom;
    report.message = std::move(msg);
    return report;
  };

  // Scalars for homogeneity: pi, 1/pi, 1 + pi, and the entries of the samples.
  std::vector<Scalar> scalars{Scalar::uniformizer(f), Scalar::pi_power(f, -1),
                              Scalar::one(f) + Scalar::uniformizer(f)};
  for (const auto& v : samples) {
    for (const auto& x : v) {
      if (!x.is_zero() && scalars.size() < 12) scalars.push_back(x);
    }
  }

  for (const auto& v : samples) {
    const NormValue nv = norm.eval(v);
    ++report.checks;
    if (nv.is_zero() != is_zero(v)) {
      return fail(1, "N(v) = " + nv.to_string(f.p) + " for v = " + to_string(v));
    }
    for (const auto& x : scalars) {
      ++report.checks;
      const NormValue lhs = norm.eval(x * v);
      if (lhs != x.abs() * nv) {
        return fail(2, "N(xv) = " + lhs.to_string(f.p) + " but |x| N(v) = " + (x.abs() * nv).to_string(f.p) +
                           " for x = " + x.to_string() + ", v = " + to_string(v));
      }
    }
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i; j < samples.size(); ++j) {
      ++report.checks;
      const NormValue sum = norm.eval(samples[i] + samples[j]);
      const NormValue bound = std::max(norm.eval(samples[i]), norm.eval(samples[j]));
      if (sum > bound) {
        return fail(3, "N(v + w) = " + sum.to_string(f.p) + " exceeds " + bound.to_string(f.p) + " for v = " +
                           to_string(samples[i]) + ", w = " + to_string(samples[j]));
      }
    }
  }
  return report;
}

}  // namespace padic
