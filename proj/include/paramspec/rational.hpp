#ifndef PARAMSPEC_RATIONAL_HPP
#define PARAMSPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace paramspec {

/// Exact arbitrary-precision rational scalar: always in lowest terms,
/// denominator > 0, canonical zero 0/1. The coefficient field for every
/// polynomial in the toolkit.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // implicit: integer literals are rationals
  Rational(long num, long den);

  /// Parses "p", "-p", or "p/q" with arbitrary-size decimal integers.
  /// Throws ValidationError on malformed text or zero denominator.
  static Rational from_string(const std::string& text);

  /// Exact conversion: every finite double is a dyadic rational.
  /// DomainError on NaN or infinity.
  static Rational from_double(double value);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // DomainError on division by zero

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  Rational abs() const;
  Rational pow(unsigned exponent) const;

  /// gcd(n1,n2)/lcm(d1,d2), canonically positive; gcd with zero is |other|.
  /// This is the content gcd used to make primitive parts integer-coprime.
  static Rational content_gcd(const Rational& a, const Rational& b);

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;
  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  double to_double() const { return value_.get_d(); }

  /// True when numerator and denominator both fit the platform long.
  bool fits_long() const;
  long numerator_long() const { return value_.get_num().get_si(); }
  long denominator_long() const { return value_.get_den().get_si(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;  // mpq invariant: canonical (lowest terms, positive denominator)
};

}  // namespace paramspec

#endif
