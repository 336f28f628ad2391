#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "padic/fp_poly.hpp"
#include "padic/norm_value.hpp"

namespace padic {

enum class FieldKind { Qp, FpT };

/// The working local field k: Q_p, or F_p((T)).
struct FieldConfig {
  FieldKind kind = FieldKind::Qp;
  std::uint64_t p = 2;
  /// Digits printed by reports; never affects computation.
  int display_depth = 8;

  static FieldConfig qp(std::uint64_t p) { return {FieldKind::Qp, p, 8}; }
  static FieldConfig fpt(std::uint64_t p) { return {FieldKind::FpT, p, 8}; }

  /// Throws std::invalid_argument unless p is prime and display_depth >= 1.
  void validate() const;
  bool same_field(const FieldConfig& o) const { return kind == o.kind && p == o.p; }
  /// "Q_2" or "F_3((T))".
  std::string name() const;
};

/// Valuation of a field element: an integer, or +infinity for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(std::int64_t v) { return Valuation(v); }

  bool is_infinite() const { return infinite_; }
  /// Throws MathError when infinite.
  std::int64_t value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  std::string to_string() const;

 private:
  Valuation() = default;
  explicit Valuation(std::int64_t v) : infinite_(false), v_(v) {}

  bool infinite_ = true;
  std::int64_t v_ = 0;
};

/// Exact element of Q (inside Q_p) or of F_p(T) (inside F_p((T))).
///
/// Qp values are reduced GMP rationals. FpT values are a numerator and a
/// monic denominator polynomial with gcd 1, so equality is structural in
/// both cases. A default-constructed Scalar is zero in Q_2; arithmetic
/// between scalars of different fields throws MathError.
class Scalar {
 public:
  Scalar();

  static Scalar zero(const FieldConfig& f);
  static Scalar one(const FieldConfig& f) { return from_integer(f, 1); }
  /// For FpT the integer is reduced into F_p.
  static Scalar from_integer(const FieldConfig& f, long long value);
  static Scalar from_rational(const FieldConfig& f, const mpq_class& q);
  static Scalar from_fraction(const FieldConfig& f, const FpPoly& num, const FpPoly& den);
  /// The uniformizer: p for Q_p, T for F_p((T)).
  static Scalar uniformizer(const FieldConfig& f);
  /// pi^k for any integer k.
  static Scalar pi_power(const FieldConfig& f, std::int64_t k);

  const FieldConfig& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Valuation valuation() const;
  NormValue abs() const;
  bool is_integral() const;
  /// Image in O_k / pi O_k = F_p. Requires an integral element.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  /// Multiplication by pi^k, done without forming pi^k.
  Scalar shifted(std::int64_t k) const;

  const mpq_class& rational() const;
  const FpPoly& numerator_poly() const;
  const FpPoly& denominator_poly() const;

  std::string to_string() const;

 private:
  struct RationalFunction {
    FpPoly num;
    FpPoly den;
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  };

  Scalar(FieldConfig f, mpq_class q);
  Scalar(FieldConfig f, RationalFunction r);
  void check_same_field(const Scalar& o) const;
  static RationalFunction normalize(FpPoly num, FpPoly den);

  FieldConfig field_;
  std::variant<mpq_class, RationalFunction> value_;
};

/// Parses "a/b" or "a" (Qp) and "(poly)/(poly)" or "poly" (FpT), where a
/// poly is a '+'-separated sum of terms c, c*T^e, cT^e, T^e or T with
/// coefficients in 0..p-1. Throws ParseError.
Scalar parse_scalar(std::string_view text, const FieldConfig& f);

/// x = principal + integral, with principal a finite sum of negative powers
/// of pi carrying digit coefficients and integral in O_k.
struct IntegralSplit {
  Scalar principal;
  Scalar integral;
};
IntegralSplit split_integral(const Scalar& x);

/// digits[i] is the coefficient of pi^(start + i).
struct DigitExpansion {
  std::int64_t start = 0;
  std::vector<std::uint64_t> digits;
};
/// First `depth` pi-adic digits of a nonzero x, starting at its valuation.
DigitExpansion digit_expansion(const Scalar& x, int depth);
/// Sum of digits[i] * pi^(start + i).
Scalar digits_value(const FieldConfig& f, const DigitExpansion& e);

}  // namespace padic
