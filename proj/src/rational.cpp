#include "paramspec/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "paramspec/errors.hpp"

namespace paramspec {

namespace {

bool is_decimal_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den)) {
    throw ValidationError("not a rational number: \"" + text + "\"");
  }
  mpq_class v(mpz_class(num, 10), mpz_class(den, 10));
  if (v.get_den() == 0) {
    throw ValidationError("zero denominator in rational: \"" + text + "\"");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("Rational: non-finite double");
  mpq_class v;
  mpq_set_d(v.get_mpq_t(), value);
  return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

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
  if (rhs.is_zero()) throw DomainError("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned exponent) const {
  mpq_class result(1);
  mpq_class base = value_;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return Rational(std::move(result));
}

Rational Rational::content_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.value_.get_num_mpz_t(), b.value_.get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.value_.get_den_mpz_t(), b.value_.get_den_mpz_t());
  mpq_class v(num, den);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::to_string() const { return value_.get_str(); }

bool Rational::fits_long() const {
  return value_.get_num().fits_slong_p() && value_.get_den().fits_slong_p();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.value_; }

}  // namespace paramspec
