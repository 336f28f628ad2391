#include "padic/fp_poly.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "padic/errors.hpp"

namespace padic {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw MathError("inverse of 0 modulo " + std::to_string(p));
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (r != 1) throw MathError("value not invertible modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t degree) {
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return FpPoly(p, std::move(coeffs));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long FpPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<long>(i);
  }
  return -1;
}

FpPoly FpPoly::operator-() const {
  FpPoly r = *this;
  for (auto& c : r.c_) c = c == 0 ? 0 : p_ - c;
  return r;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p_) c_[i] -= p_;
  }
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p_ - o.c_[i];
  }
  trim();
  return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  FpPoly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = (r.c_[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    }
  }
  r.trim();
  return r;
}

FpPoly FpPoly::scaled(std::uint64_t c) const {
  FpPoly r = *this;
  for (auto& x : r.c_) x = mul_mod(x, c, p_);
  r.trim();
  return r;
}

FpPoly FpPoly::shifted_up(std::size_t k) const {
  if (is_zero()) return *this;
  FpPoly r(p_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

FpPoly FpPoly::shifted_down(std::size_t k) const {
  if (is_zero()) return *this;
  for (std::size_t i = 0; i < k; ++i) {
    if (coeff(i) != 0) throw MathError("polynomial not divisible by T^" + std::to_string(k));
  }
  FpPoly r(p_);
  r.c_.assign(c_.begin() + static_cast<long>(std::min(k, c_.size())), c_.end());
  return r;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(leading(), p_));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  const std::uint64_t p = a.p_;
  FpPoly q(p);
  FpPoly r = a;
  if (r.degree() < b.degree()) return {q, r};
  const std::uint64_t lead_inv = inv_mod(b.leading(), p);
  q.c_.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), 0);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const std::uint64_t factor = mul_mod(r.leading(), lead_inv, p);
    q.c_[shift] = factor;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      const std::uint64_t sub = mul_mod(factor, b.c_[j], p);
      auto& slot = r.c_[shift + j];
      slot = slot >= sub ? slot - sub : slot + p - sub;
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly FpPoly::pow_mod(FpPoly base, std::uint64_t exp, const FpPoly& m) {
  FpPoly result = divmod(constant(m.p_, 1), m).second;
  base = divmod(base, m).second;
  while (exp > 0) {
    if (exp & 1) result = divmod(result * base, m).second;
    base = divmod(base * base, m).second;
    exp >>= 1;
  }
  return result;
}

bool FpPoly::is_irreducible() const {
  if (degree() < 1) throw MathError("irreducibility test needs a polynomial of positive degree");
  const FpPoly f = monic();
  const auto d = static_cast<std::size_t>(f.degree());
  if (d == 1) return true;
  const FpPoly x = monomial(p_, 1, 1);
  // frob[i] = x^(p^i) mod f
  std::vector<FpPoly> frob{divmod(x, f).second};
  for (std::size_t i = 1; i <= d; ++i) frob.push_back(pow_mod(frob.back(), p_, f));
  if (frob[d] != divmod(x, f).second) return false;
  std::size_t rest = d;
  for (std::size_t q = 2; q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    if (!gcd(frob[d / q] - x, f).is_one()) return false;
  }
  return true;
}

std::string FpPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c_[i];
      continue;
    }
    if (c_[i] != 1) out << c_[i] << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

}  // namespace padic
