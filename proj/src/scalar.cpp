#include "padic/scalar.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

namespace {

std::int64_t p_adic_order(const mpz_class& n, std::uint64_t p) {
  if (n == 0) return 0;
  mpz_class rest;
  mpz_class prime(static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

std::uint64_t mod_p(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

mpz_class mpz_pow(std::uint64_t p, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw ParseError("cannot parse scalar '" + std::string(text) + "': " + why);
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.empty()) fail(whole, "empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(whole, "sign without digits");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) fail(whole, "unexpected character");
  }
  const std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

std::uint64_t parse_small(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail(whole, "bad number '" + std::string(s) + "'");
  return v;
}

FpPoly parse_poly(std::string_view s, std::uint64_t p, std::string_view whole) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) fail(whole, "empty polynomial");
  FpPoly result(p);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t plus = s.find('+', pos);
    const std::string_view term = trim(s.substr(pos, plus == std::string_view::npos ? s.npos : plus - pos));
    if (term.empty()) fail(whole, "empty term");
    std::uint64_t coeff = 1;
    std::uint64_t degree = 0;
    const std::size_t t = term.find('T');
    if (t == std::string_view::npos) {
      coeff = parse_small(term, whole);
    } else {
      std::string_view c = trim(term.substr(0, t));
      if (!c.empty() && c.back() == '*') c = trim(c.substr(0, c.size() - 1));
      if (!c.empty()) coeff = parse_small(c, whole);
      std::string_view rest = trim(term.substr(t + 1));
      if (rest.empty()) {
        degree = 1;
      } else {
        if (rest.front() != '^') fail(whole, "expected '^' after T");
        degree = parse_small(trim(rest.substr(1)), whole);
      }
    }
    if (coeff >= p) fail(whole, "coefficient " + std::to_string(coeff) + " is not in 0.." + std::to_string(p - 1));
    if (degree > 100000) fail(whole, "degree too large");
    result += FpPoly::monomial(p, coeff, degree);
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return result;
}

// Position of the '/' separating numerator and denominator, outside parentheses.
std::size_t top_level_slash(std::string_view s, std::string_view whole) {
  int depth = 0;
  std::size_t found = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) fail(whole, "unbalanced parentheses");
    if (s[i] == '/' && depth == 0) {
      if (found != std::string_view::npos) fail(whole, "more than one '/'");
      found = i;
    }
  }
  if (depth != 0) fail(whole, "unbalanced parentheses");
  return found;
}

}  // namespace

void FieldConfig::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (display_depth < 1) throw std::invalid_argument("display_depth must be at least 1");
}

std::string FieldConfig::name() const {
  return kind == FieldKind::Qp ? "Q_" + std::to_string(p) : "F_" + std::to_string(p) + "((T))";
}

std::int64_t Valuation::value() const {
  if (infinite_) throw MathError("valuation of zero is infinite");
  return v_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.v_ <=> b.v_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(v_); }

Scalar::Scalar() : field_(FieldConfig::qp(2)), value_(mpq_class(0)) {}

Scalar::Scalar(FieldConfig f, mpq_class q) : field_(f), value_(std::move(q)) {}

Scalar::Scalar(FieldConfig f, RationalFunction r) : field_(f), value_(std::move(r)) {}

Scalar Scalar::zero(const FieldConfig& f) { return from_integer(f, 0); }

Scalar Scalar::from_integer(const FieldConfig& f, long long value) {
  if (f.kind == FieldKind::Qp) return Scalar(f, mpq_class(mpz_class(std::to_string(value))));
  const auto p = static_cast<long long>(f.p);
  const auto c = static_cast<std::uint64_t>(((value % p) + p) % p);
  return Scalar(f, RationalFunction{FpPoly::constant(f.p, c), FpPoly::constant(f.p, 1)});
}

Scalar Scalar::from_rational(const FieldConfig& f, const mpq_class& q) {
  if (f.kind != FieldKind::Qp) throw MathError("rational literal used in " + f.name());
  mpq_class c = q;
  c.canonicalize();
  return Scalar(f, std::move(c));
}

Scalar Scalar::from_fraction(const FieldConfig& f, const FpPoly& num, const FpPoly& den) {
  if (f.kind != FieldKind::FpT) throw MathError("rational function used in " + f.name());
  if (num.modulus() != f.p || den.modulus() != f.p) throw MathError("polynomial over the wrong prime field");
  return Scalar(f, normalize(num, den));
}

Scalar Scalar::uniformizer(const FieldConfig& f) { return pi_power(f, 1); }

Scalar Scalar::pi_power(const FieldConfig& f, std::int64_t k) { return one(f).shifted(k); }

Scalar::RationalFunction Scalar::normalize(FpPoly num, FpPoly den) {
  if (den.is_zero()) throw MathError("division by zero");
  const std::uint64_t p = den.modulus();
  if (num.is_zero()) return {FpPoly(p), FpPoly::constant(p, 1)};
  FpPoly g = FpPoly::gcd(num, den);
  if (!g.is_one()) {
    num = FpPoly::divmod(num, g).first;
    den = FpPoly::divmod(den, g).first;
  }
  const std::uint64_t lead_inv = inv_mod(den.leading(), p);
  return {num.scaled(lead_inv), den.scaled(lead_inv)};
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!field_.same_field(o.field_)) {
    throw MathError("arithmetic between " + field_.name() + " and " + o.field_.name());
  }
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 0;
  return std::get<RationalFunction>(value_).num.is_zero();
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  const auto& r = std::get<RationalFunction>(value_);
  return r.num.is_one() && r.den.is_one();
}

Valuation Scalar::valuation() const {
  if (is_zero()) return Valuation::infinity();
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return Valuation::finite(p_adic_order(q->get_num(), field_.p) - p_adic_order(q->get_den(), field_.p));
  }
  const auto& r = std::get<RationalFunction>(value_);
  return Valuation::finite(r.num.order() - r.den.order());
}

NormValue Scalar::abs() const {
  const Valuation v = valuation();
  if (v.is_infinite()) return NormValue::zero();
  return NormValue::pi_power(v.value());
}

bool Scalar::is_integral() const { return valuation() >= Valuation::finite(0); }

std::uint64_t Scalar::residue() const {
  if (!is_integral()) throw MathError("residue of a non-integral element " + to_string());
  if (is_zero()) return 0;
  const std::uint64_t p = field_.p;
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return mul_mod(mod_p(q->get_num(), p), inv_mod(mod_p(q->get_den(), p), p), p);
  }
  const auto& r = std::get<RationalFunction>(value_);
  return mul_mod(r.num.coeff(0), inv_mod(r.den.coeff(0), p), p);
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(field_, mpq_class(-*q));
  const auto& r = std::get<RationalFunction>(value_);
  return Scalar(field_, RationalFunction{-r.num, r.den});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
    return *this;
  }
  auto& a = std::get<RationalFunction>(value_);
  const auto& b = std::get<RationalFunction>(o.value_);
  if (a.den == b.den) {
    a = normalize(a.num + b.num, a.den);
  } else {
    a = normalize(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
    return *this;
  }
  auto& a = std::get<RationalFunction>(value_);
  const auto& b = std::get<RationalFunction>(o.value_);
  a = normalize(a.num * b.num, a.den * b.den);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  if (o.is_zero()) throw MathError("division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q /= std::get<mpq_class>(o.value_);
    return *this;
  }
  auto& a = std::get<RationalFunction>(value_);
  const auto& b = std::get<RationalFunction>(o.value_);
  a = normalize(a.num * b.den, a.den * b.num);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_.same_field(b.field_) && a.value_ == b.value_;
}

Scalar Scalar::inverse() const { return one(field_) / *this; }

Scalar Scalar::shifted(std::int64_t k) const {
  if (k == 0 || is_zero()) return *this;
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    const mpz_class power = mpz_pow(field_.p, static_cast<std::uint64_t>(k > 0 ? k : -k));
    mpq_class r = *q;
    if (k > 0) {
      r.get_num() *= power;
    } else {
      r.get_den() *= power;
    }
    r.canonicalize();
    return Scalar(field_, std::move(r));
  }
  const auto& r = std::get<RationalFunction>(value_);
  const auto shift = static_cast<std::size_t>(k > 0 ? k : -k);
  if (k > 0) return Scalar(field_, normalize(r.num.shifted_up(shift), r.den));
  return Scalar(field_, normalize(r.num, r.den.shifted_up(shift)));
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw MathError("rational() called on an element of " + field_.name());
}

const FpPoly& Scalar::numerator_poly() const {
  if (const auto* r = std::get_if<RationalFunction>(&value_)) return r->num;
  throw MathError("numerator_poly() called on an element of " + field_.name());
}

const FpPoly& Scalar::denominator_poly() const {
  if (const auto* r = std::get_if<RationalFunction>(&value_)) return r->den;
  throw MathError("denominator_poly() called on an element of " + field_.name());
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  const auto& r = std::get<RationalFunction>(value_);
  if (r.den.is_one()) return r.num.to_string();
  return "(" + r.num.to_string() + ")/(" + r.den.to_string() + ")";
}

Scalar parse_scalar(std::string_view text, const FieldConfig& f) {
  const std::string_view s = trim(text);
  if (s.empty()) fail(text, "empty input");
  const std::size_t slash = top_level_slash(s, text);
  if (f.kind == FieldKind::Qp) {
    const mpz_class num = parse_integer(slash == std::string_view::npos ? s : s.substr(0, slash), text);
    const mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_integer(s.substr(slash + 1), text);
    if (den == 0) fail(text, "zero denominator");
    return Scalar::from_rational(f, mpq_class(num, den));
  }
  const FpPoly num = parse_poly(slash == std::string_view::npos ? s : s.substr(0, slash), f.p, text);
  const FpPoly den = slash == std::string_view::npos ? FpPoly::constant(f.p, 1) : parse_poly(s.substr(slash + 1), f.p, text);
  if (den.is_zero()) fail(text, "zero denominator");
  return Scalar::from_fraction(f, num, den);
}

DigitExpansion digit_expansion(const Scalar& x, int depth) {
  if (depth < 1) throw MathError("digit expansion depth must be at least 1");
  if (x.is_zero()) throw MathError("digit expansion of zero");
  const FieldConfig& f = x.field();
  DigitExpansion e;
  e.start = x.valuation().value();
  Scalar y = x.shifted(-e.start);
  e.digits.reserve(static_cast<std::size_t>(depth));
  for (int i = 0; i < depth; ++i) {
    const std::uint64_t d = y.residue();
    e.digits.push_back(d);
    if (i + 1 < depth) y = (y - Scalar::from_integer(f, static_cast<long long>(d))).shifted(-1);
  }
  return e;
}

Scalar digits_value(const FieldConfig& f, const DigitExpansion& e) {
  Scalar sum = Scalar::zero(f);
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    if (e.digits[i] == 0) continue;
    sum += Scalar::from_integer(f, static_cast<long long>(e.digits[i])).shifted(e.start + static_cast<std::int64_t>(i));
  }
  return sum;
}

IntegralSplit split_integral(const Scalar& x) {
  const FieldConfig& f = x.field();
  const Valuation v = x.valuation();
  if (v >= Valuation::finite(0)) return {Scalar::zero(f), x};
  const Scalar principal = digits_value(f, digit_expansion(x, static_cast<int>(-v.value())));
  return {principal, x - principal};
}

}  // namespace padic
