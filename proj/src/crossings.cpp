#include "paramspec/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "paramspec/elimination.hpp"
#include "paramspec/errors.hpp"
#include "paramspec/jacobi.hpp"

namespace paramspec {

namespace {

double jacobi_tolerance(const Matrix<double>& m) {
  double fro = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) fro += m.at(i, j) * m.at(i, j);
  }
  return 1e-12 * std::max(1.0, std::sqrt(fro));
}

// Group ascending eigenvalues into clusters with adjacent gaps below gap_tol
// and keep the groups of two or more.
std::vector<MeetCluster> meeting_clusters(const std::vector<double>& eig, double gap_tol) {
  std::vector<MeetCluster> clusters;
  std::size_t start = 0;
  while (start < eig.size()) {
    std::size_t end = start + 1;
    while (end < eig.size() && eig[end] - eig[end - 1] < gap_tol) ++end;
    if (end - start >= 2) {
      MeetCluster cluster;
      double sum = 0.0;
      for (std::size_t k = start; k < end; ++k) {
        cluster.indices.push_back(static_cast<int>(k));
        sum += eig[k];
      }
      cluster.value = sum / static_cast<double>(end - start);
      clusters.push_back(std::move(cluster));
    }
    start = end;
  }
  return clusters;
}

}  // namespace

CrossingReport classify_crossings(const ParametricMatrix& h, const ClassifyOptions& options) {
  CrossingReport report;

  const BiPoly p = h.char_poly();
  report.identically_zero_before_reduction = discriminant(p).is_zero();

  const BiPoly q = p.square_free_part();
  const UniPoly disc = discriminant(q);
  if (disc.is_zero()) {
    throw InternalFault(
        "classify_crossings: discriminant vanishes after square-free reduction");
  }
  report.discriminant = disc;

  if (!disc.is_constant()) {
    for (const RealRoot& root : sturm_real_roots(disc, options.lambda_tol)) {
      const Rational at = root.exact ? root.lower : (root.lower + root.upper) / 2;
      const Matrix<double> frozen = h.eval_at(at);
      const auto eig = jacobi_eigenvalues(frozen, jacobi_tolerance(frozen));
      auto meets = meeting_clusters(eig, options.gap_tol);
      if (meets.empty()) {
        report.unconfirmed.push_back(root);
      } else {
        report.crossings.push_back({root, std::move(meets)});
      }
    }

    const UniPoly reduced_disc = disc.square_free_part();
    if (!reduced_disc.is_constant()) {
      for (const ComplexRoot& root : complex_roots(reduced_disc)) {
        if (!root.is_real()) report.exceptional_points.push_back(root);
      }
    }
    if (!report.exceptional_points.empty()) {
      double radius = std::numeric_limits<double>::infinity();
      for (const auto& ep : report.exceptional_points) radius = std::min(radius, ep.modulus());
      report.convergence_radius = radius;
    }
  }

  report.degeneracy = h.degeneracy_profile();
  return report;
}

SweepTable sweep(const ParametricMatrix& h, double lo, double hi, int steps) {
  if (steps < 2) throw DomainError("sweep: steps must be >= 2");
  if (!(lo < hi)) throw DomainError("sweep: range must satisfy lo < hi");
  SweepTable table;
  table.parameter_values.reserve(static_cast<std::size_t>(steps));
  table.eigenvalue_rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(steps - 1);
    const double value = lo + t * (hi - lo);
    const Matrix<double> frozen = h.eval_at(value);
    table.parameter_values.push_back(value);
    table.eigenvalue_rows.push_back(jacobi_eigenvalues(frozen, jacobi_tolerance(frozen)));
  }
  return table;
}

}  // namespace paramspec
