#ifndef PARAMSPEC_SYMMETRY_HPP
#define PARAMSPEC_SYMMETRY_HPP

#include <string>
#include <vector>

#include "paramspec/matrix.hpp"
#include "paramspec/parametric_matrix.hpp"
#include "paramspec/rational.hpp"

namespace paramspec {

/// Orthogonal signed-permutation matrix U with U[images[i]][i] = signs[i].
/// Plain permutations have all signs +1. U^T U = I holds structurally.
struct SignedPermutation {
  std::vector<int> images;  // bijection on {0..n-1}
  std::vector<int> signs;   // +1 or -1 per source index

  static SignedPermutation identity(int n);

  int dim() const { return static_cast<int>(images.size()); }
  bool is_identity() const;

  /// Matrix product this * other (apply other first).
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  /// Smallest k >= 1 with U^k = I.
  int order() const;

  Matrix<Rational> matrix() const;

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.images == b.images && a.signs == b.signs;
  }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b);

  std::string to_string() const;  // one-line images, e.g. "(3 4 5 6 1 2)" with sign marks
};

/// Finite group of signed permutations: identity first, elements canonically
/// sorted, composition table cayley[i][j] = index of elements[i]*elements[j].
struct SymmetryGroup {
  std::vector<SignedPermutation> elements;
  std::vector<std::vector<int>> cayley;
  bool abelian = true;

  int order() const { return static_cast<int>(elements.size()); }
};

struct SymmetryOptions {
  bool signed_search = false;
  int max_dimension = 10;        // exhaustive n! scan bound
  int max_group_size = 10000;    // closure bound
};

/// Exact commutation test: U^T H(lambda) U = H(lambda) as a polynomial
/// identity, checked coefficient-by-coefficient. DomainError on dimension
/// mismatch.
bool commutes(const ParametricMatrix& h, const SignedPermutation& u);

/// All (signed) permutations commuting with the whole family, by exhaustive
/// scan with early pruning; canonically sorted, identity first.
/// CapabilityError when dim > options.max_dimension.
std::vector<SignedPermutation> find_symmetries(const ParametricMatrix& h,
                                               const SymmetryOptions& options = {});

/// Closure of the generators under composition, with identity and inverses;
/// CapabilityError when the closure would exceed options.max_group_size.
SymmetryGroup group_closure(const std::vector<SignedPermutation>& generators,
                            const SymmetryOptions& options = {});

/// Symmetry analysis connected to the degeneracy profile: a nonabelian
/// commutant group is the "degeneracy expected" signal.
struct SymmetryReport {
  SymmetryGroup group;
  bool degeneracy_expected = false;  // nonabelian flag
  bool degeneracy_observed = false;  // from the degeneracy profile
  bool consistent = true;
  std::string note;
};

SymmetryReport symmetry_report(const ParametricMatrix& h, const SymmetryOptions& options = {});

}  // namespace paramspec

#endif
