#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zol {

/// Exact arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. All density and f-value comparisons go through this.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p/q", "p" or a finite decimal such as "0.125".
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;

  double toDouble() const;
  std::string str() const;

  int sign() const;
  bool isZero() const { return sign() == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Integer power, exponent may be negative for nonzero bases.
  Rational pow(int exponent) const;

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace zol
