#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace padic {

/// Exponents of norm values are exact rationals.
using Exponent = boost::rational<std::int64_t>;

/// Exact non-negative real of the form p^(-order), or zero.
///
/// The prime is implicit: values from different fields are never compared.
/// The order is the valuation-like quantity, so larger order means a
/// smaller value; `exponent()` returns the real exponent -order.
class NormValue {
 public:
  NormValue() = default;  // zero

  static NormValue zero() { return {}; }
  static NormValue one() { return from_order(Exponent(0)); }
  static NormValue from_order(Exponent order);
  /// |pi^k| = p^(-k).
  static NormValue pi_power(std::int64_t k) { return from_order(Exponent(k)); }

  bool is_zero() const { return zero_; }
  /// Throws MathError for zero.
  Exponent order() const;
  Exponent exponent() const { return -order(); }

  NormValue inverse() const;
  NormValue pow(std::int64_t k) const;
  /// Exact d-th root (d >= 1).
  NormValue root(std::int64_t d) const;

  friend NormValue operator*(const NormValue& a, const NormValue& b);
  friend NormValue operator/(const NormValue& a, const NormValue& b);
  NormValue& operator*=(const NormValue& o) { return *this = *this * o; }

  friend bool operator==(const NormValue& a, const NormValue& b);
  friend std::strong_ordering operator<=>(const NormValue& a, const NormValue& b);

  /// "0" or "p^e" with e = -order in lowest terms, e.g. "2^-11/2".
  std::string to_string(std::uint64_t p) const;
  /// Inverse of to_string; also accepts "1". Throws ParseError.
  static NormValue parse(std::string_view text, std::uint64_t p);

 private:
  bool zero_ = true;
  Exponent order_{0};
};

std::string exponent_to_string(const Exponent& e);

}  // namespace padic
