#ifndef PARAMSPEC_CROSSINGS_HPP
#define PARAMSPEC_CROSSINGS_HPP

#include <optional>
#include <vector>

#include "paramspec/aberth.hpp"
#include "paramspec/parametric_matrix.hpp"
#include "paramspec/sturm.hpp"

namespace paramspec {

/// A group of eigenvalues that meet (pairwise gaps below gap_tol) at one
/// parameter value; indices refer to the ascending eigenvalue order.
struct MeetCluster {
  double value = 0.0;
  std::vector<int> indices;
};

/// A confirmed level crossing: a real discriminant root at which eigenvalues
/// verifiably meet.
struct Crossing {
  RealRoot location;
  std::vector<MeetCluster> meets;
};

/// End-to-end classification output: the discriminant of the reduced
/// characteristic polynomial, the pathology flag for the unreduced one, the
/// verified real crossings, the exceptional points off the real axis, and
/// the branch-multiplicity profile that explains an identically vanishing
/// discriminant.
struct CrossingReport {
  UniPoly discriminant;                          // Disc_E of the reduced polynomial
  bool identically_zero_before_reduction = false;  // Disc_E(char_poly) == 0
  std::vector<Crossing> crossings;               // sorted by parameter value
  std::vector<RealRoot> unconfirmed;             // discriminant roots with no eigenvalue meet
  std::vector<ComplexRoot> exceptional_points;   // non-real discriminant roots, conjugate pairs
  std::optional<double> convergence_radius;      // min modulus over exceptional points
  DegeneracyProfile degeneracy;
};

struct ClassifyOptions {
  Rational lambda_tol = Rational(1, 1000000000000L);  // 1e-12 root refinement
  double gap_tol = 1e-8;                              // eigenvalue meeting threshold
};

/// The full pipeline: char poly -> discriminant (pathology check) ->
/// square-free reduction -> discriminant -> real roots verified against
/// numeric spectra, complex roots reported as exceptional points.
/// InternalFault if the reduced discriminant vanishes identically, which a
/// square-free polynomial cannot produce.
CrossingReport classify_crossings(const ParametricMatrix& h, const ClassifyOptions& options = {});

/// Uniform parameter sweep: eigenvalues (ascending) on a steps-point grid
/// over [lo, hi]. DomainError unless steps >= 2 and lo < hi.
struct SweepTable {
  std::vector<double> parameter_values;
  std::vector<std::vector<double>> eigenvalue_rows;  // one ascending row per grid point
};

SweepTable sweep(const ParametricMatrix& h, double lo, double hi, int steps);

}  // namespace paramspec

#endif
