#pragma once

#include <cstdint>
#include <random>

#include "padic/lattice.hpp"
#include "padic/norm.hpp"

namespace padic {

/// Deterministic generators for randomized suites. Everything is driven by
/// a caller-owned std::mt19937_64, so a seed reproduces a run.
using Rng = std::mt19937_64;

/// Element of O_k: small integers over p-prime denominators for Q_p,
/// low-degree polynomial quotients with unit denominators for F_p((T)).
Scalar random_integral(const FieldConfig& f, Rng& rng);
Scalar random_unit(const FieldConfig& f, Rng& rng);
/// Random nonzero scalar with valuation in [min_val, max_val], or zero with
/// probability `zero_chance`.
Scalar random_scalar(const FieldConfig& f, Rng& rng, int min_val, int max_val, double zero_chance = 0.0);
Vector random_vector(const FieldConfig& f, std::size_t m, Rng& rng, int min_val, int max_val, double zero_chance = 0.2);

/// Product of unit-triangular factors with integral entries, a unit
/// diagonal and a random column permutation; always in GL_n(O_k).
Matrix random_unimodular(const FieldConfig& f, std::size_t n, Rng& rng);

/// Basis U_m[:, :n] * diag(pi^e_i) * V_n with unimodular U_m, V_n and
/// e_i uniform in [min_exp, max_exp]. Rejects bases whose Gram matrix is
/// singular (only possible over F_p((T))).
Lattice random_lattice(const FieldConfig& f, std::size_t m, std::size_t n, Rng& rng, int min_exp = -3, int max_exp = 3);

/// B x with x uniform-ish in O_k^n.
Vector random_lattice_vector(const Lattice& lattice, Rng& rng);

/// Weights p^(-q) with q in {-2, ..., 2} / d for a random d in {1, 2}.
Norm random_weighted_sup(std::size_t m, Rng& rng);

/// Extension norm for the first monic degree-m polynomial with digit
/// coefficients (lower coefficients counted like an odometer, constant term
/// fastest) that is irreducible over F_p.
Norm unramified_extension(const FieldConfig& f, std::size_t m);
/// x^m - pi: a totally ramified extension (value group p^(Z/m)).
Norm eisenstein_extension(const FieldConfig& f, std::size_t m);

}  // namespace padic
