#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyhull {

using Integer = mpz_class;

/// Exact arbitrary-precision rational number, always kept in lowest terms
/// with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}
  Rational(const Integer& value) : value_(value) {}

  /// Throws std::domain_error when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts `p` or `p/q` with an optional leading sign. Throws
  /// std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  std::string to_string() const { return value_.get_str(); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  /// *this += a * b without an intermediate Rational.
  Rational& add_product(const Rational& a, const Rational& b) {
    value_ += a.value_ * b.value_;
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    return lhs /= rhs;
  }
  friend Rational operator-(const Rational& value) {
    return Rational(mpq_class(-value.value_));
  }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

/// Least common multiple of two positive integers.
Integer lcm(const Integer& a, const Integer& b);

/// Greatest common divisor, always nonnegative; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

}  // namespace polyhull
