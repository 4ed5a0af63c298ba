#ifndef PARAMSPEC_JACOBI_HPP
#define PARAMSPEC_JACOBI_HPP

#include <vector>

#include "paramspec/matrix.hpp"

namespace paramspec {

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sweeping until the off-diagonal Frobenius norm drops below tol; returned
/// ascending. DomainError when the input is not square or not symmetric
/// within 1e-12 (relative to the largest entry); NumericError if the sweep
/// cap is hit, which a symmetric input cannot trigger in practice.
std::vector<double> jacobi_eigenvalues(const Matrix<double>& m, double tol);

}  // namespace paramspec

#endif
