#ifndef PARAMSPEC_PARAMETRIC_MATRIX_HPP
#define PARAMSPEC_PARAMETRIC_MATRIX_HPP

#include <string>
#include <vector>

#include "paramspec/bipoly.hpp"
#include "paramspec/matrix.hpp"
#include "paramspec/unipoly.hpp"

namespace paramspec {

/// Outer variable used for every characteristic polynomial.
inline constexpr const char* kEnergyVar = "E";

/// Multiplicity structure of the characteristic polynomial in E: one branch
/// per square-free factor. persistent_degeneracy is true exactly when some
/// branch has multiplicity >= 2, i.e. eigenvalue curves coincide for all
/// parameter values.
struct DegeneracyBranch {
  BiPoly factor;
  int multiplicity;
  int e_degree;
};

struct DegeneracyProfile {
  std::vector<DegeneracyBranch> branches;
  bool persistent_degeneracy = false;
};

/// Real symmetric n x n matrix whose entries are polynomials in one real
/// parameter. Immutable after build; all operations are pure.
class ParametricMatrix {
 public:
  struct Entry {
    int i;  // 0-based
    int j;
    UniPoly value;
  };

  /// Builds from sparse entries (0-based indices). Unspecified entries are
  /// zero; symmetry is enforced by mirroring. Providing both (i,j) and (j,i)
  /// is allowed only when the values agree; a conflict is a ValidationError
  /// naming both offending entries.
  static ParametricMatrix build(int n, const std::vector<Entry>& entries,
                                std::string parameter = "lambda");

  int dim() const { return n_; }
  const std::string& parameter() const { return parameter_; }
  const UniPoly& entry(int i, int j) const;

  /// Exact monic characteristic polynomial: (-1)^n |H - E I|, computed by
  /// fraction-free elimination over the bivariate polynomial ring, so the
  /// coefficient of E^n is exactly 1.
  BiPoly char_poly() const;

  /// Square-free part of char_poly in E: same eigenvalue branches, no
  /// repeated factor.
  BiPoly reduced_char_poly() const;

  DegeneracyProfile degeneracy_profile() const;

  /// Entry-wise evaluation at a parameter value. The Rational overload
  /// evaluates exactly and then converts to double; the double overload
  /// evaluates in double precision directly.
  Matrix<double> eval_at(const Rational& value) const;
  Matrix<double> eval_at(double value) const;
  Matrix<Rational> eval_at_exact(const Rational& value) const;

  /// The constant matrix family H(value): every entry frozen to a constant
  /// polynomial. Used to study symmetry at special parameter values.
  ParametricMatrix frozen_at(const Rational& value) const;

 private:
  ParametricMatrix(int n, std::string parameter, std::vector<UniPoly> entries)
      : n_(n), parameter_(std::move(parameter)), entries_(std::move(entries)) {}

  int n_;
  std::string parameter_;
  std::vector<UniPoly> entries_;  // row-major, symmetric
};

}  // namespace paramspec

#endif
