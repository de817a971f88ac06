#include "zol/rational.hpp"

#include "zol/errors.hpp"

#include <cctype>
#include <ostream>

namespace zol {

namespace mp = boost::multiprecision;

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  // cpp_rational rejects negative denominators.
  if (denominator < 0) value_ = mp::cpp_rational(-Integer(numerator), -Integer(denominator));
  else value_ = mp::cpp_rational(numerator, denominator);
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  if (denominator < 0) value_ = mp::cpp_rational(Integer(-numerator), Integer(-denominator));
  else value_ = mp::cpp_rational(numerator, denominator);
}

namespace {

Rational::Integer parseInteger(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw ArgumentError("malformed rational: '" + std::string(whole) + "'");
  Rational::Integer v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ArgumentError("malformed rational: '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return negative ? Rational::Integer(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ArgumentError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parseInteger(text.substr(0, slash), text);
    auto den = parseInteger(text.substr(slash + 1), text);
    if (den == 0) throw ArgumentError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw ArgumentError("malformed rational: '" + std::string(text) + "'");
    digits += frac;
    if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(parseInteger(digits, text), den);
  }
  return Rational(parseInteger(text, text), Integer(1));
}

Rational::Integer Rational::numerator() const { return mp::numerator(value_); }
Rational::Integer Rational::denominator() const { return mp::denominator(value_); }

double Rational::toDouble() const { return value_.convert_to<double>(); }

std::string Rational::str() const { return value_.str(); }

int Rational::sign() const { return value_.sign(); }

Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.isZero()) throw DomainError("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (isZero()) throw DomainError("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  Rational result(1);
  Rational base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace zol
