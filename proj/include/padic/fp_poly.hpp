#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace padic {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);

/// Dense univariate polynomial over the prime field F_p.
///
/// Coefficients are stored lowest degree first and kept trimmed, so the zero
/// polynomial has an empty coefficient vector and equality is structural.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::uint64_t p) : p_(p) {}
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t degree);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient (the T-adic order); -1 for zero.
  long order() const;
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }

  FpPoly operator-() const;
  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

  FpPoly scaled(std::uint64_t c) const;
  FpPoly shifted_up(std::size_t k) const;
  /// Divides by T^k; the k lowest coefficients must vanish.
  FpPoly shifted_down(std::size_t k) const;
  FpPoly monic() const;

  /// Euclidean division; throws MathError on a zero divisor.
  static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
  /// Monic gcd (zero when both inputs are zero).
  static FpPoly gcd(FpPoly a, FpPoly b);
  /// base^exp mod m.
  static FpPoly pow_mod(FpPoly base, std::uint64_t exp, const FpPoly& m);

  /// Rabin's test; the polynomial must have positive degree.
  bool is_irreducible() const;

  std::string to_string(char var = 'T') const;

 private:
  void trim();

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

}  // namespace padic
