#include "paramspec/elimination.hpp"

#include "paramspec/dense_poly.hpp"
#include "paramspec/errors.hpp"

namespace paramspec {

namespace {

// Sylvester layout: e columns of A-coefficients (leading first, shifted down one
// per column), then d columns of B-coefficients. Entries fetched descending.
template <typename Elem, typename Poly>
Matrix<Elem> sylvester_layout(const Poly& a, const Poly& b, const Elem& zero) {
  if (a.is_zero() || b.is_zero()) {
    throw DomainError("sylvester_matrix: zero polynomial");
  }
  const int d = *a.degree();
  const int e = *b.degree();
  if (d == 0 && e == 0) {
    throw DomainError("sylvester_matrix: both polynomials are constant");
  }
  const std::size_t n = static_cast<std::size_t>(d + e);
  Matrix<Elem> m(n, n, zero);
  for (int col = 0; col < e; ++col) {
    for (int j = 0; j <= d; ++j) {
      m.at(static_cast<std::size_t>(col + j), static_cast<std::size_t>(col)) = a.coeff(d - j);
    }
  }
  for (int col = 0; col < d; ++col) {
    for (int j = 0; j <= e; ++j) {
      m.at(static_cast<std::size_t>(col + j), static_cast<std::size_t>(e + col)) =
          b.coeff(e - j);
    }
  }
  return m;
}

int disc_sign_exponent(int d) { return (d * (d - 1) / 2) % 2; }

}  // namespace

Matrix<Rational> sylvester_matrix(const UniPoly& a, const UniPoly& b) {
  merge_vars(a.var(), a.is_constant(), b.var(), b.is_constant());
  return sylvester_layout<Rational>(a, b, 0);
}

Matrix<UniPoly> sylvester_matrix(const BiPoly& a, const BiPoly& b) {
  merge_vars(a.outer_var(), a.is_constant_in_outer(), b.outer_var(), b.is_constant_in_outer());
  return sylvester_layout<UniPoly>(a, b, UniPoly());
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant: zero polynomial");
  merge_vars(a.var(), a.is_constant(), b.var(), b.is_constant());
  const RationalOps ops;
  return dense::resultant(ops, a.coeffs(), b.coeffs());
}

UniPoly resultant(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant: zero polynomial");
  merge_vars(a.outer_var(), a.is_constant_in_outer(), b.outer_var(), b.is_constant_in_outer());
  const UniPolyOps ops{a.inner_var().empty() ? b.inner_var() : a.inner_var()};
  return dense::resultant(ops, a.coeffs(), b.coeffs());
}

Rational resultant_sylvester(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant: zero polynomial");
  const int d = *a.degree();
  const int e = *b.degree();
  if (d == 0 && e == 0) return 1;
  if (d == 0) return a.leading().pow(static_cast<unsigned>(e));
  if (e == 0) return b.leading().pow(static_cast<unsigned>(d));
  const RationalOps ops;
  return determinant_bareiss(ops, sylvester_matrix(a, b));
}

UniPoly resultant_sylvester(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant: zero polynomial");
  const UniPolyOps ops{a.inner_var().empty() ? b.inner_var() : a.inner_var()};
  const int d = *a.degree();
  const int e = *b.degree();
  auto pow = [&ops](const UniPoly& base, int k) {
    UniPoly acc = ops.one();
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
  };
  if (d == 0 && e == 0) return ops.one();
  if (d == 0) return pow(a.leading(), e);
  if (e == 0) return pow(b.leading(), d);
  return determinant_bareiss(ops, sylvester_matrix(a, b));
}

Rational discriminant(const UniPoly& a) {
  if (a.is_zero() || a.is_constant()) {
    throw DomainError("discriminant: input must have degree >= 1");
  }
  const Rational res = resultant(a, a.derivative());
  const Rational value = res / a.leading();
  return disc_sign_exponent(*a.degree()) == 1 ? -value : value;
}

UniPoly discriminant(const BiPoly& a) {
  if (a.is_zero() || a.is_constant_in_outer()) {
    throw DomainError("discriminant: input must have degree >= 1 in the outer variable");
  }
  const UniPoly res = resultant(a, a.derivative_outer());
  if (res.is_zero()) {
    // Res(A, A') vanishes identically: A has a repeated factor for all
    // parameter values; the discriminant is the zero polynomial.
    return UniPoly::zero(a.inner_var());
  }
  const UniPoly value = res.exact_div(a.leading());
  return disc_sign_exponent(*a.degree()) == 1 ? -value : value;
}

}  // namespace paramspec
