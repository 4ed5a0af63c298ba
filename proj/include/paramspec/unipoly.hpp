#ifndef PARAMSPEC_UNIPOLY_HPP
#define PARAMSPEC_UNIPOLY_HPP

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paramspec/rational.hpp"

namespace paramspec {

template <typename Poly>
struct SquareFreeFactor {
  Poly factor;
  int multiplicity;
};

/// input = content * prod factor_i ^ multiplicity_i, exactly; the factors
/// are primitive, positive-leading, square-free and pairwise coprime.
template <typename Poly, typename Content>
struct SquareFreeDecomposition {
  Content content;
  std::vector<SquareFreeFactor<Poly>> factors;
};

/// Dense univariate polynomial over Rational with a variable tag.
/// Coefficients are stored lowest power first with no trailing zeros; the
/// zero polynomial has an empty coefficient vector and degree() returns
/// nullopt. Constants are tag-agnostic: they combine and compare with any
/// variable.
///
/// Normalization conventions (applied by content_and_primitive, gcd,
/// square_free_*): a primitive polynomial has integer, collectively coprime
/// coefficients and a positive leading coefficient; the content carries the
/// sign, so content_and_primitive(-3x) = (-3, x). gcd over this field
/// ignores rational contents: gcd(2x^2-2, 4x-4) = x - 1.
class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial, constant tag

  UniPoly(std::string var, std::vector<Rational> coeffs_lowest_first);
  static UniPoly zero(std::string var);
  static UniPoly constant(const Rational& value);
  static UniPoly monomial(std::string var, const Rational& coeff, int power);
  static UniPoly variable(std::string var) { return monomial(std::move(var), 1, 1); }

  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<int> degree() const;
  /// Coefficient of var^power (zero beyond the degree).
  const Rational& coeff(int power) const;
  /// Leading coefficient; DomainError on the zero polynomial.
  const Rational& leading() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rational& c);
  friend UniPoly operator*(const Rational& c, const UniPoly& b) { return b * c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly derivative() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  /// Field long division: (quotient, remainder) with deg r < deg divisor.
  /// DomainError on zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Division known to be exact; a nonzero remainder is an InternalFault.
  UniPoly exact_div(const UniPoly& divisor) const;

  /// Rational content of the coefficients, canonically positive.
  /// DomainError on the zero polynomial.
  Rational content() const;
  /// (signed content, primitive part): *this = content * primitive, with the
  /// primitive part integer-coprime and positive-leading.
  std::pair<Rational, UniPoly> content_and_primitive() const;

  /// Primitive positive-leading gcd; DomainError when both inputs are zero.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  /// this / gcd(this, this'), primitive and positive-leading.
  /// DomainError on the zero polynomial.
  UniPoly square_free_part() const;

  SquareFreeDecomposition<UniPoly, Rational> square_free_decomposition() const;

  /// Human-readable descending-power rendering, e.g. "3/2*x^2 - x + 1".
  std::string to_string() const;

 private:
  void trim();

  std::string var_;
  std::vector<Rational> coeffs_;  // index = power, trailing zeros removed
};

/// Ring-ops adapter exposing Rational to the dense polynomial kernel.
struct RationalOps {
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long n) const { return n; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool negative(const Elem& a) const { return a.sign() < 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem exact_div(const Elem& a, const Elem& b) const;
  Elem content_gcd(const Elem& a, const Elem& b) const { return Rational::content_gcd(a, b); }
  // Rational is a field: contents contribute nothing to a polynomial gcd.
  Elem poly_content_gcd(const Elem&, const Elem&) const { return 1; }
};

/// Merged variable tag for an operation on two polynomials; constants adopt
/// the other operand's tag, otherwise the tags must match (DomainError).
std::string merge_vars(const std::string& a_var, bool a_constant, const std::string& b_var,
                       bool b_constant);

}  // namespace paramspec

#endif
