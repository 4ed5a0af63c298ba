#ifndef PARAMSPEC_ABERTH_HPP
#define PARAMSPEC_ABERTH_HPP

#include <complex>
#include <vector>

#include "paramspec/unipoly.hpp"

namespace paramspec {

/// A numerically found polynomial root with its scaled backward error
/// |p(z)| / sum_k |a_k||z|^k.
struct ComplexRoot {
  std::complex<double> value;
  double residual = 0.0;

  double modulus() const { return std::abs(value); }
  bool is_real() const { return value.imag() == 0.0; }
};

/// All deg(a) roots, with multiplicity, by simultaneous Aberth-Ehrlich
/// iteration in double precision. The input is first decomposed exactly into
/// square-free factors, so multiple roots come back as exact repetitions
/// instead of numeric clusters. Initial guesses are deterministic (fixed
/// perturbed circle); output is sorted by (re, im). For real input,
/// conjugate symmetry is enforced and near-real roots are snapped to the
/// real axis. DomainError on constant input; NumericError (carrying the
/// best residuals) if the iteration cap is hit.
std::vector<ComplexRoot> complex_roots(const UniPoly& a, double tol = 1e-13);

}  // namespace paramspec

#endif
