#ifndef PARAMSPEC_BIPOLY_HPP
#define PARAMSPEC_BIPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paramspec/unipoly.hpp"

namespace paramspec {

/// Polynomial in an outer variable (E) whose coefficients are UniPoly in an
/// inner variable (lambda). Dense in the outer power; no trailing zero
/// coefficients; the zero polynomial has an empty coefficient vector.
/// gcd / square-free / content operations act on the outer variable, over
/// the coefficient ring Q[inner].
class BiPoly {
 public:
  BiPoly() = default;  // zero polynomial

  BiPoly(std::string outer_var, std::string inner_var, std::vector<UniPoly> coeffs);
  static BiPoly zero(std::string outer_var, std::string inner_var);
  /// Degree 0 in the outer variable (the value may still depend on inner).
  static BiPoly constant(std::string outer_var, std::string inner_var, UniPoly value);
  static BiPoly monomial(std::string outer_var, std::string inner_var, UniPoly coeff,
                         int outer_power);

  const std::string& outer_var() const { return outer_var_; }
  const std::string& inner_var() const { return inner_var_; }
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant_in_outer() const { return coeffs_.size() <= 1; }
  std::optional<int> degree() const;  // in the outer variable
  const UniPoly& coeff(int outer_power) const;
  const UniPoly& leading() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b);
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Term-wise power rule in either variable; DomainError when the tag
  /// matches neither.
  BiPoly derivative(const std::string& wrt) const;
  BiPoly derivative_outer() const;

  /// Specialize the inner variable: exact evaluation of every coefficient,
  /// giving a UniPoly in the outer variable.
  UniPoly at_inner(const Rational& inner_value) const;
  Rational eval(const Rational& outer_value, const Rational& inner_value) const;

  /// Division known to be exact in Q[inner][outer]; InternalFault otherwise.
  BiPoly exact_div(const BiPoly& divisor) const;

  /// Content in Q[inner] (canonically positive-leading) and the primitive
  /// part with collectively integer-coprime, positive-leading coefficients;
  /// the content carries the sign. DomainError on zero.
  std::pair<UniPoly, BiPoly> content_and_primitive() const;

  /// Primitive positive-leading gcd in the outer variable (Gauss: content
  /// gcd times primitive-part gcd). DomainError when both are zero.
  static BiPoly gcd(const BiPoly& a, const BiPoly& b);

  /// this / gcd(this, d this/d outer), normalized. DomainError on zero.
  BiPoly square_free_part() const;

  SquareFreeDecomposition<BiPoly, UniPoly> square_free_decomposition() const;

  /// Descending outer powers, inner coefficients parenthesized as needed,
  /// e.g. "E^4 - (2*lambda^2 + lambda + 2)*E^2 + ...".
  std::string to_string() const;

 private:
  void trim();
  void check_inner_tags() const;

  std::string outer_var_;
  std::string inner_var_;
  std::vector<UniPoly> coeffs_;  // index = outer power
};

/// Ring-ops adapter exposing UniPoly (in a fixed inner variable) to the
/// dense polynomial kernel; used for all outer-variable algebra on BiPoly
/// and for Sylvester determinants over polynomial entries.
struct UniPolyOps {
  using Elem = UniPoly;
  std::string var;

  Elem zero() const { return UniPoly::zero(var); }
  Elem one() const { return UniPoly::constant(1); }
  Elem from_int(long n) const { return UniPoly::constant(n); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool negative(const Elem& a) const { return a.leading().sign() < 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem exact_div(const Elem& a, const Elem& b) const { return a.exact_div(b); }
  /// Full gcd over Q[var] with the integer-primitive canonical form:
  /// rational-content gcd times primitive-part gcd, positive-leading.
  Elem content_gcd(const Elem& a, const Elem& b) const;
  Elem poly_content_gcd(const Elem& a, const Elem& b) const { return content_gcd(a, b); }
};

}  // namespace paramspec

#endif
