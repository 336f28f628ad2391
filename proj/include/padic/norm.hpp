#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padic/linalg.hpp"

namespace padic {

enum class NormKind { Sup, WeightedSup, Extension };

/// A non-archimedean norm on k^m from one of three families:
///
///  - Sup:          M(v) = max_i |v_i|
///  - WeightedSup:  max_i w_i |v_i| with every weight a nonzero p^(-q)
///  - Extension:    the absolute value of K = k[x]/(f) for a monic f of
///                  degree m, transported to k^m through the power basis
///                  1, x, ..., x^(m-1); |a| = |det(mult. by a)|^(1/m).
///
/// Extension norms are certified when f has integral coefficients and
/// irreducible reduction mod pi (then K/k is unramified of degree m).
/// Uncertified polynomials are accepted; run axiom_check on them.
class Norm {
 public:
  static Norm sup();
  static Norm weighted_sup(std::vector<NormValue> weights);
  /// Coefficients lowest degree first; the last must be 1.
  static Norm extension(std::vector<Scalar> min_poly);

  NormKind kind() const { return kind_; }
  /// Fixed ambient dimension; nullopt for Sup, which works in any dimension.
  std::optional<std::size_t> dimension() const;
  bool certified_unramified() const { return certified_; }
  const std::vector<NormValue>& weights() const { return weights_; }
  const std::vector<Scalar>& min_poly() const { return min_poly_; }

  NormValue eval(const Vector& v) const;
  NormValue operator()(const Vector& v) const { return eval(v); }

  std::string describe(const FieldConfig& f) const;

 private:
  NormKind kind_ = NormKind::Sup;
  std::vector<NormValue> weights_;
  std::vector<Scalar> min_poly_;
  bool certified_ = true;
};

/// Matrix of multiplication by the element with coordinates v in k[x]/(f),
/// f given by its monic coefficient list.
Matrix multiplication_matrix(const Vector& v, std::span<const Scalar> min_poly);

/// True iff every coefficient is integral and the reduction mod pi is
/// irreducible over F_p.
bool reduction_irreducible(std::span<const Scalar> min_poly);

struct AxiomReport {
  bool passed = true;
  /// 1, 2 or 3 for the first violated axiom; 0 when passed.
  int failed_axiom = 0;
  std::string message;
  std::size_t checks = 0;
};

/// Checks N(v) = 0 iff v = 0, N(xv) = |x| N(v) and N(v + w) <= max(N(v), N(w))
/// on the samples and their pairs. Reports the first violation.
AxiomReport axiom_check(const Norm& norm, std::span<const Vector> samples);

}  // namespace padic
