#pragma once
// Test-side reference computations. These deliberately avoid the library's
// elimination, orthogonalization and search code so that agreement means
// something.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "padic/cvp.hpp"
#include "padic/lattice.hpp"
#include "padic/norm.hpp"

namespace oracle {

using namespace padic;

// p-adic valuation of a nonzero rational by repeated division.
inline std::int64_t qp_valuation(const mpq_class& q, unsigned long p) {
  std::int64_t v = 0;
  mpz_class n = q.get_num(), d = q.get_den();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

// T-adic valuation of num/den: lowest nonzero coefficient indices.
inline std::int64_t fpt_valuation(const Scalar& x) {
  auto low = [](const FpPoly& f) {
    std::int64_t i = 0;
    while (f.coeff(static_cast<std::size_t>(i)) == 0) ++i;
    return i;
  };
  return low(x.numerator_poly()) - low(x.denominator_poly());
}

inline std::int64_t valuation(const Scalar& x) {
  return x.field().kind == FieldKind::Qp ? qp_valuation(x.rational(), x.field().p) : fpt_valuation(x);
}

// Leibniz expansion over all permutations; fine up to 6x6.
inline Scalar leibniz_det(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = Scalar::zero(a.field());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Scalar term = Scalar::one(a.field());
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Inverse by cofactors.
inline Matrix cramer_inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  const Scalar d = leibniz_det(a);
  Matrix out(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(a.field(), n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      const Scalar cof = n == 1 ? Scalar::one(a.field()) : leibniz_det(minor);
      out(j, i) = ((i + j) % 2 ? -cof : cof) / d;
    }
  }
  return out;
}

// Every O_k combination with coefficients truncated to `depth` digits,
// visited without any pruning. Cost p^(n depth).
template <typename Visit>
void for_each_truncated(const Lattice& l, int depth, Visit&& visit) {
  const FieldConfig& f = l.field();
  const std::size_t n = l.rank();
  const std::size_t slots = n * static_cast<std::size_t>(depth);
  std::vector<std::uint64_t> digits(slots, 0);
  for (;;) {
    Vector coeffs(n, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i) {
      for (int k = 0; k < depth; ++k) {
        const auto d = digits[i * depth + k];
        if (d) coeffs[i] += Scalar::from_integer(f, static_cast<long long>(d)).shifted(k);
      }
    }
    visit(coeffs, mat_vec(l.basis(), coeffs));
    std::size_t s = 0;
    while (s < slots && ++digits[s] == f.p) digits[s++] = 0;
    if (s == slots) return;
  }
}

inline NormValue naive_cvp_distance(const Lattice& l, const Norm& norm, const Vector& t, int depth) {
  std::optional<NormValue> best;
  for_each_truncated(l, depth, [&](const Vector&, const Vector& v) {
    const NormValue d = norm(t - v);
    if (!best || d < *best) best = d;
  });
  return *best;
}

// Largest norm over the truncated lattice points; equals the first maximum.
inline NormValue naive_longest(const Lattice& l, const Norm& norm, int depth) {
  NormValue best = NormValue::zero();
  for_each_truncated(l, depth, [&](const Vector&, const Vector& v) { best = std::max(best, norm(v)); });
  return best;
}

// Successive maxima from the residue classes of L / pi L.
//
// For a class a in F_p^n, mu(a) = dist(B a, pi L) is the largest maximum
// among the orthogonal directions that a touches, so the number of classes
// with mu <= v is p^(#maxima <= v). The distances are found with the
// enumeration CVP on pi L. Returns nullopt if some distance is not certified
// exact at the given depth.
inline std::optional<std::vector<NormValue>> residue_class_maxima(const Lattice& l, const Norm& norm, int depth) {
  const FieldConfig& f = l.field();
  const std::size_t n = l.rank();
  const Lattice pil = scaled(l, Scalar::uniformizer(f));
  const NormValue top = max_basis_norm(pil, norm);
  std::map<NormValue, std::size_t> count;
  std::vector<std::uint64_t> a(n, 0);
  for (;;) {
    bool nonzero = std::any_of(a.begin(), a.end(), [](auto x) { return x != 0; });
    if (nonzero) {
      Vector coeffs;
      for (auto x : a) coeffs.push_back(Scalar::from_integer(f, static_cast<long long>(x)));
      const NormValue mu = cvp_bruteforce(pil, norm, mat_vec(l.basis(), coeffs), depth).distance;
      if (!depth_sufficient(depth, top, mu)) return std::nullopt;
      ++count[mu];
    }
    std::size_t i = 0;
    while (i < n && ++a[i] == f.p) a[i++] = 0;
    if (i == n) break;
  }
  // Walk the values upward: #{mu <= v} + 1 (the zero class) is a power of p.
  std::vector<NormValue> maxima;
  std::size_t below = 1;
  for (const auto& [value, c] : count) {
    std::size_t upto = below + c;
    std::size_t k_below = 0, k_upto = 0;
    for (std::size_t x = below; x > 1; x /= f.p) ++k_below;
    for (std::size_t x = upto; x > 1; x /= f.p) {
      if (x % f.p) throw std::logic_error("class count is not a power of p");
      ++k_upto;
    }
    for (std::size_t j = k_below; j < k_upto; ++j) maxima.push_back(value);
    below = upto;
  }
  std::reverse(maxima.begin(), maxima.end());
  return maxima;
}

}  // namespace oracle
