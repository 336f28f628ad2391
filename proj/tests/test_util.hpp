#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "padic/lattice.hpp"
#include "padic/random.hpp"

namespace testutil {

using namespace padic;

inline Scalar q(const FieldConfig& f, long a, long b = 1) { return Scalar::from_rational(f, mpq_class(a, b)); }
inline Scalar s(const FieldConfig& f, const std::string& text) { return parse_scalar(text, f); }

inline Vector vec(const FieldConfig& f, std::initializer_list<const char*> entries) {
  Vector v;
  for (auto e : entries) v.push_back(parse_scalar(e, f));
  return v;
}

inline Matrix cols(std::initializer_list<Vector> columns) { return Matrix::from_columns(std::vector<Vector>(columns)); }

inline NormValue pv(long long order) { return NormValue::pi_power(order); }
inline NormValue pv(long long num, long long den) { return NormValue::from_order(Exponent(num, den)); }

// The fields used by randomized tests.
inline std::vector<FieldConfig> all_fields() {
  return {FieldConfig::qp(2), FieldConfig::qp(3), FieldConfig::qp(5), FieldConfig::fpt(2), FieldConfig::fpt(3)};
}

// Basis columns of L(1, 2z, 16z^2 + 16z^3) in power-basis coordinates.
inline Matrix cyclotomic_basis() {
  const FieldConfig f = FieldConfig::qp(2);
  return cols({vec(f, {"1", "0", "0", "0"}), vec(f, {"0", "2", "0", "0"}), vec(f, {"0", "0", "16", "16"})});
}

inline Norm cyclotomic_norm() {
  const FieldConfig f = FieldConfig::qp(2);
  return Norm::extension(vec(f, {"1", "1", "1", "1", "1"}));
}

}  // namespace testutil
