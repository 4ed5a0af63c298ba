#ifndef PARAMSPEC_ELIMINATION_HPP
#define PARAMSPEC_ELIMINATION_HPP

#include <cstddef>

#include "paramspec/bipoly.hpp"
#include "paramspec/matrix.hpp"
#include "paramspec/unipoly.hpp"

namespace paramspec {

/// Fraction-free (Bareiss) determinant over an exact integral domain: all
/// intermediate divisions are exact. Row pivoting on zero pivots with sign
/// tracking; DomainError on non-square input. The ring-ops object must
/// provide zero/one/is_zero/mul/sub/neg/exact_div.
template <typename Ops>
typename Ops::Elem determinant_bareiss(const Ops& R, Matrix<typename Ops::Elem> m) {
  if (!m.square()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return R.one();
  bool negate = false;
  auto prev = R.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (R.is_zero(m.at(k, k))) {
      std::size_t pivot = k;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (!R.is_zero(m.at(r, k))) {
          pivot = r;
          break;
        }
      }
      if (pivot == k) return R.zero();  // zero column below and at the diagonal
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = R.exact_div(
            R.sub(R.mul(m.at(i, j), m.at(k, k)), R.mul(m.at(i, k), m.at(k, j))), prev);
      }
      m.at(i, k) = R.zero();
    }
    prev = m.at(k, k);
  }
  auto det = m.at(n - 1, n - 1);
  return negate ? R.neg(det) : det;
}

/// Sylvester matrix of two univariate polynomials, laid out with e columns
/// of A-coefficients (leading coefficient first, each column shifted down by
/// one) followed by d columns of B-coefficients. Its determinant is
/// Res_x(A, B). DomainError when either input is zero or both are constant.
Matrix<Rational> sylvester_matrix(const UniPoly& a, const UniPoly& b);

/// Same layout for bivariate polynomials, eliminating the outer variable;
/// entries are UniPoly in the inner variable.
Matrix<UniPoly> sylvester_matrix(const BiPoly& a, const BiPoly& b);

/// Resultant via the subresultant polynomial remainder sequence (the default
/// path). DomainError on zero input.
Rational resultant(const UniPoly& a, const UniPoly& b);
UniPoly resultant(const BiPoly& a, const BiPoly& b);

/// Resultant via the Sylvester determinant evaluated with Bareiss
/// elimination; retained as the independent cross-check of the PRS path.
Rational resultant_sylvester(const UniPoly& a, const UniPoly& b);
UniPoly resultant_sylvester(const BiPoly& a, const BiPoly& b);

/// Discriminant: (-1)^(d(d-1)/2) / lc(A) * Res(A, A'). Zero exactly when A
/// has a repeated root. DomainError on constant input; an inexact division
/// by the leading coefficient is an InternalFault (theory guarantees it).
Rational discriminant(const UniPoly& a);
UniPoly discriminant(const BiPoly& a);

}  // namespace paramspec

#endif
