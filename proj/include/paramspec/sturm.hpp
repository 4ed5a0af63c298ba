#ifndef PARAMSPEC_STURM_HPP
#define PARAMSPEC_STURM_HPP

#include <vector>

#include "paramspec/rational.hpp"
#include "paramspec/unipoly.hpp"

namespace paramspec {

/// A distinct real root: exact isolating interval (degenerate when the root
/// was hit exactly during bisection), refined double value inside it, and
/// the multiplicity in the original polynomial.
struct RealRoot {
  Rational lower;
  Rational upper;
  double value = 0.0;
  int multiplicity = 1;
  bool exact = false;
};

/// All distinct real roots of a nonconstant polynomial, isolated by Sturm
/// sign counting on the square-free part and refined by bisection until the
/// interval width is <= tol. Multiplicities come from the square-free
/// decomposition. Roots are sorted ascending. DomainError on zero or
/// constant input.
std::vector<RealRoot> sturm_real_roots(const UniPoly& a, const Rational& tol);

}  // namespace paramspec

#endif
