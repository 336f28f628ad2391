#include "padic/norm_value.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "padic/errors.hpp"

namespace padic {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed norm value '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string exponent_to_string(const Exponent& e) {
  std::string s = std::to_string(e.numerator());
  if (e.denominator() != 1) s += "/" + std::to_string(e.denominator());
  return s;
}

NormValue NormValue::from_order(Exponent order) {
  NormValue v;
  v.zero_ = false;
  v.order_ = order;
  return v;
}

Exponent NormValue::order() const {
  if (zero_) throw MathError("order of the zero norm value");
  return order_;
}

NormValue NormValue::inverse() const {
  if (zero_) throw MathError("inverse of the zero norm value");
  return from_order(-order_);
}

NormValue NormValue::pow(std::int64_t k) const {
  if (zero_) {
    if (k <= 0) throw MathError("non-positive power of the zero norm value");
    return zero();
  }
  return from_order(order_ * k);
}

NormValue NormValue::root(std::int64_t d) const {
  if (d < 1) throw MathError("root index must be positive");
  if (zero_) return zero();
  return from_order(order_ / d);
}

NormValue operator*(const NormValue& a, const NormValue& b) {
  if (a.zero_ || b.zero_) return NormValue::zero();
  return NormValue::from_order(a.order_ + b.order_);
}

NormValue operator/(const NormValue& a, const NormValue& b) {
  if (b.zero_) throw MathError("division by the zero norm value");
  if (a.zero_) return NormValue::zero();
  return NormValue::from_order(a.order_ - b.order_);
}

bool operator==(const NormValue& a, const NormValue& b) {
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  return a.order_ == b.order_;
}

std::strong_ordering operator<=>(const NormValue& a, const NormValue& b) {
  if (a.zero_ || b.zero_) {
    if (a.zero_ && b.zero_) return std::strong_ordering::equal;
    return a.zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.order_ == b.order_) return std::strong_ordering::equal;
  // Larger order means smaller value.
  return a.order_ > b.order_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string NormValue::to_string(std::uint64_t p) const {
  if (zero_) return "0";
  return std::to_string(p) + "^" + exponent_to_string(-order_);
}

NormValue NormValue::parse(std::string_view text, std::uint64_t p) {
  const std::string_view s = trim(text);
  if (s == "0") return zero();
  if (s == "1") return one();
  const auto caret = s.find('^');
  if (caret == std::string_view::npos) throw ParseError("malformed norm value '" + std::string(text) + "'");
  const std::int64_t base = parse_int(trim(s.substr(0, caret)), text);
  if (base < 0 || static_cast<std::uint64_t>(base) != p) {
    throw ParseError("norm value '" + std::string(text) + "' does not use the field prime " + std::to_string(p));
  }
  const std::string_view exp = trim(s.substr(caret + 1));
  const auto slash = exp.find('/');
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (slash == std::string_view::npos) {
    num = parse_int(exp, text);
  } else {
    num = parse_int(trim(exp.substr(0, slash)), text);
    den = parse_int(trim(exp.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator in norm value '" + std::string(text) + "'");
  }
  return from_order(-Exponent(num, den));
}

}  // namespace padic
