#include "padic/random.hpp"

#include <algorithm>
#include <numeric>

#include "padic/errors.hpp"

namespace padic {

namespace {

long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

FpPoly random_poly(std::uint64_t p, std::size_t max_degree, Rng& rng) {
  std::vector<std::uint64_t> c(max_degree + 1);
  for (auto& x : c) x = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long long>(p) - 1));
  return FpPoly(p, std::move(c));
}

}  // namespace

Scalar random_integral(const FieldConfig& f, Rng& rng) {
  if (f.kind == FieldKind::Qp) {
    const auto p = static_cast<long long>(f.p);
    const long long num = uniform(rng, -p * p, p * p);
    long long den = 1;
    if (uniform(rng, 0, 3) == 0) {
      do {
        den = uniform(rng, 2, 7);
      } while (den % p == 0);
    }
    return Scalar::from_rational(f, mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
  }
  const FpPoly num = random_poly(f.p, 2, rng);
  FpPoly den = FpPoly::constant(f.p, 1);
  if (uniform(rng, 0, 3) == 0) {
    den = random_poly(f.p, 1, rng);
    if (den.coeff(0) == 0) den += FpPoly::constant(f.p, 1);
  }
  return Scalar::from_fraction(f, num, den);
}

Scalar random_unit(const FieldConfig& f, Rng& rng) {
  for (;;) {
    Scalar x = random_integral(f, rng);
    if (!x.is_zero() && x.residue() != 0) return x;
  }
}

Scalar random_scalar(const FieldConfig& f, Rng& rng, int min_val, int max_val, double zero_chance) {
  if (zero_chance > 0 && std::uniform_real_distribution<double>(0, 1)(rng) < zero_chance) return Scalar::zero(f);
  return random_unit(f, rng).shifted(uniform(rng, min_val, max_val));
}

Vector random_vector(const FieldConfig& f, std::size_t m, Rng& rng, int min_val, int max_val, double zero_chance) {
  Vector v;
  v.reserve(m);
  for (std::size_t i = 0; i < m; ++i) v.push_back(random_scalar(f, rng, min_val, max_val, zero_chance));
  return v;
}

Matrix random_unimodular(const FieldConfig& f, std::size_t n, Rng& rng) {
  Matrix lower = Matrix::identity(f, n);
  Matrix upper(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    upper(i, i) = random_unit(f, rng);
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = random_integral(f, rng);
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = random_integral(f, rng);
  }
  Matrix prod = lower * upper;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix out(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = prod(r, perm[c]);
  }
  return out;
}

Lattice random_lattice(const FieldConfig& f, std::size_t m, std::size_t n, Rng& rng, int min_exp, int max_exp) {
  if (n == 0 || n > m) throw MathError("random_lattice: need 1 <= n <= m");
  for (;;) {
    const Matrix u = random_unimodular(f, m, rng);
    const Matrix v = random_unimodular(f, n, rng);
    Matrix head(f, m, n);
    for (std::size_t c = 0; c < n; ++c) {
      const std::int64_t e = uniform(rng, min_exp, max_exp);
      for (std::size_t r = 0; r < m; ++r) head(r, c) = u(r, c).shifted(e);
    }
    Matrix basis = head * v;
    if (rank(basis) != n) continue;
    if (det(basis.transpose() * basis).is_zero()) continue;
    return Lattice(std::move(basis));
  }
}

Vector random_lattice_vector(const Lattice& lattice, Rng& rng) {
  Vector coeffs;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Scalar c = random_integral(lattice.field(), rng);
    coeffs.push_back(c.shifted(uniform(rng, 0, 2)));
  }
  return mat_vec(lattice.basis(), coeffs);
}

Norm random_weighted_sup(std::size_t m, Rng& rng) {
  const long long den = uniform(rng, 1, 2);
  std::vector<NormValue> w;
  for (std::size_t i = 0; i < m; ++i) w.push_back(NormValue::from_order(Exponent(uniform(rng, -2, 2), den)));
  return Norm::weighted_sup(std::move(w));
}

Norm unramified_extension(const FieldConfig& f, std::size_t m) {
  if (m == 0) throw MathError("extension degree must be positive");
  // Odometer over the m lower coefficients, constant term fastest.
  std::vector<std::uint64_t> low(m, 0);
  for (;;) {
    std::vector<std::uint64_t> coeffs = low;
    coeffs.push_back(1);
    if (FpPoly(f.p, coeffs).is_irreducible()) {
      std::vector<Scalar> poly;
      for (auto c : coeffs) poly.push_back(Scalar::from_integer(f, static_cast<long long>(c)));
      return Norm::extension(std::move(poly));
    }
    std::size_t i = 0;
    while (i < m && ++low[i] == f.p) low[i++] = 0;
    if (i == m) throw MathError("no irreducible polynomial found");
  }
}

Norm eisenstein_extension(const FieldConfig& f, std::size_t m) {
  if (m == 0) throw MathError("extension degree must be positive");
  std::vector<Scalar> poly(m + 1, Scalar::zero(f));
  poly[0] = -Scalar::uniformizer(f);
  poly[m] = Scalar::one(f);
  return Norm::extension(std::move(poly));
}

}  // namespace padic
