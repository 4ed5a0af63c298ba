#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "paramspec/errors.hpp"
#include "paramspec/symmetry.hpp"
#include "support/oracles.hpp"

using namespace paramspec;
using namespace paramspec::testing;

namespace {

SignedPermutation plain(std::vector<int> images) {
  SignedPermutation p;
  p.signs.assign(images.size(), 1);
  p.images = std::move(images);
  return p;
}

// The hexagon family's commutant: rotations by two and four steps plus the
// three edge-midpoint reflections.
const SignedPermutation kRotation2 = plain({2, 3, 4, 5, 0, 1});
const SignedPermutation kRotation4 = plain({4, 5, 0, 1, 2, 3});
const SignedPermutation kReflection12 = plain({1, 0, 5, 4, 3, 2});
const SignedPermutation kReflection16 = plain({5, 4, 3, 2, 1, 0});
const SignedPermutation kReflection14 = plain({3, 2, 1, 0, 5, 4});

Matrix<Rational> multiply(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Matrix<Rational> out(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

Matrix<Rational> transpose(const Matrix<Rational>& a) {
  Matrix<Rational> out(a.cols(), a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  }
  return out;
}

Matrix<Rational> identity_matrix(std::size_t n) {
  Matrix<Rational> out(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

}  // namespace

TEST_CASE("commutes: rotation and reflection hold, plain shift does not") {
  const ParametricMatrix h = benzene_fixture();
  CHECK(commutes(h, kRotation2));
  CHECK(commutes(h, kReflection12));
  CHECK(!commutes(h, plain({1, 2, 3, 4, 5, 0})));
  CHECK_THROWS_AS(commutes(h, plain({1, 0})), DomainError);
}

TEST_CASE("find_symmetries on the hexagon family") {
  const ParametricMatrix h = benzene_fixture();
  const auto found = find_symmetries(h);
  REQUIRE(found.size() == 6);
  CHECK(found.front().is_identity());

  const std::set<SignedPermutation> set(found.begin(), found.end());
  CHECK(set.count(kRotation2) == 1);
  CHECK(set.count(kRotation4) == 1);
  CHECK(set.count(kReflection12) == 1);
  CHECK(set.count(kReflection16) == 1);
  CHECK(set.count(kReflection14) == 1);

  for (const auto& u : found) {
    CHECK(commutes(h, u));
    // U^T U = I, exactly.
    CHECK(multiply(transpose(u.matrix()), u.matrix()) == identity_matrix(6));
  }

  // The commutant is already closed: closure adds nothing.
  const auto group = group_closure(found);
  CHECK(group.order() == 6);
  CHECK(!group.abelian);
  CHECK(std::equal(group.elements.begin(), group.elements.end(), found.begin()));
}

TEST_CASE("find_symmetries with the parameter frozen at 1: full hexagon group") {
  const auto found = find_symmetries(benzene_fixture().frozen_at(1));
  CHECK(found.size() == 12);
  const auto group = group_closure(found);
  CHECK(group.order() == 12);
  CHECK(!group.abelian);
}

TEST_CASE("find_symmetries on the 2x2 swap block") {
  const ParametricMatrix block = ParametricMatrix::build(2, {{0, 1, UniPoly::constant(1)}});
  const auto found = find_symmetries(block);
  REQUIRE(found.size() == 2);
  CHECK(found[0].is_identity());
  CHECK(found[1] == plain({1, 0}));

  SymmetryOptions signed_options;
  signed_options.signed_search = true;
  const auto with_signs = find_symmetries(block, signed_options);
  CHECK(with_signs.size() == 4);  // +/-identity and +/-swap
  for (const auto& u : with_signs) CHECK(commutes(block, u));
}

TEST_CASE("search bound produces a capability error") {
  SymmetryOptions options;
  options.max_dimension = 4;
  CHECK_THROWS_AS(find_symmetries(benzene_fixture(), options), CapabilityError);
}

TEST_CASE("group_closure") {
  SUBCASE("single rotation generates the cyclic group of order 3") {
    const auto group = group_closure({kRotation2});
    CHECK(group.order() == 3);
    CHECK(group.abelian);
  }
  SUBCASE("rotation and reflection generate the order-6 nonabelian group") {
    const auto group = group_closure({kRotation2, kReflection12});
    CHECK(group.order() == 6);
    CHECK(!group.abelian);
    // Direct witness: the two generators do not commute.
    CHECK(!(kRotation2.compose(kReflection12) == kReflection12.compose(kRotation2)));
  }
  SUBCASE("empty generating set gives the trivial group") {
    const auto group = group_closure({});
    CHECK(group.order() == 1);
    CHECK(group.abelian);
  }
  SUBCASE("closure bound") {
    SymmetryOptions options;
    options.max_group_size = 4;
    CHECK_THROWS_AS(group_closure({kRotation2, kReflection12}, options), CapabilityError);
  }
}

TEST_CASE("Cayley table matches matrix multiplication") {
  const auto group = group_closure({kRotation2, kReflection12});
  const int n = group.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& product = group.elements[static_cast<std::size_t>(
          group.cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])];
      CHECK(product.matrix() ==
            multiply(group.elements[static_cast<std::size_t>(i)].matrix(),
                     group.elements[static_cast<std::size_t>(j)].matrix()));
    }
  }
}

TEST_CASE("element orders in the hexagon commutant") {
  CHECK(kRotation2.order() == 3);
  CHECK(kRotation4.order() == 3);
  CHECK(kReflection12.order() == 2);
  CHECK(kReflection16.order() == 2);
  CHECK(kReflection14.order() == 2);
  CHECK(SignedPermutation::identity(6).order() == 1);
  CHECK(kRotation2.compose(kRotation2) == kRotation4);
  CHECK(kRotation2.inverse() == kRotation4);
}

TEST_CASE("symmetry_report ties group structure to degeneracy") {
  SUBCASE("hexagon family: nonabelian and degenerate, consistent") {
    const auto report = symmetry_report(benzene_fixture());
    CHECK(report.group.order() == 6);
    CHECK(report.degeneracy_expected);
    CHECK(report.degeneracy_observed);
    CHECK(report.consistent);
  }
  SUBCASE("swap block: abelian, no degeneracy, consistent") {
    const auto report =
        symmetry_report(ParametricMatrix::build(2, {{0, 1, UniPoly::constant(1)}}));
    CHECK(report.group.order() == 2);
    CHECK(!report.degeneracy_expected);
    CHECK(!report.degeneracy_observed);
    CHECK(report.consistent);
  }
  SUBCASE("diag(lambda, lambda): degeneracy the permutation group cannot explain") {
    const UniPoly lambda = UniPoly::variable("lambda");
    const auto report =
        symmetry_report(ParametricMatrix::build(2, {{0, 0, lambda}, {1, 1, lambda}}));
    CHECK(report.group.order() == 2);  // identity and the swap
    CHECK(!report.degeneracy_expected);
    CHECK(report.degeneracy_observed);
    CHECK(!report.consistent);
    CHECK(report.note == "degeneracy not explained by detected permutation symmetries");
  }
}
