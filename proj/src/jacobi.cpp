#include "paramspec/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "paramspec/errors.hpp"

namespace paramspec {

namespace {

double off_diagonal_norm(const Matrix<double>& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j) sum += m.at(i, j) * m.at(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const Matrix<double>& m, double tol) {
  if (!m.square()) throw DomainError("jacobi_eigenvalues: matrix is not square");
  const std::size_t n = m.rows();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m.at(i, j)));
  }
  const double sym_tol = 1e-12 * std::max(1.0, scale);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m.at(i, j) - m.at(j, i)) > sym_tol) {
        throw DomainError("jacobi_eigenvalues: matrix is not symmetric");
      }
    }
  }

  Matrix<double> a = m;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol) {
      std::vector<double> eig(n);
      for (std::size_t i = 0; i < n; ++i) eig[i] = a.at(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (apq == 0.0) continue;
        const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rotate rows/columns p and q.
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a.at(k, p);
          const double akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a.at(p, k);
          const double aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  throw NumericError("jacobi_eigenvalues: sweep cap reached", {off_diagonal_norm(a)});
}

}  // namespace paramspec
