#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "paramspec/elimination.hpp"
#include "paramspec/errors.hpp"
#include "support/oracles.hpp"

using namespace paramspec;
using namespace paramspec::testing;

namespace {

// abs of a complex product comparison helper
double rel_error(double found, double expected) {
  const double scale = std::max(1.0, std::abs(expected));
  return std::abs(found - expected) / scale;
}

BiPoly golden_q() { return bpoly({{1, 1, 0, 1, 1}, {}, {-2, -1, -2}, {}, {1}}); }

BiPoly golden_p() {
  return bpoly({{-1, 0, 0, -2, 0, 0, -1}, {}, {3, 0, 3, 0, 3}, {}, {-3, 0, -3}, {}, {1}});
}

// Root-product form of the resultant from independently found numeric roots.
double root_product_resultant(const UniPoly& a, const UniPoly& b) {
  const auto ra = durand_kerner_roots(a);
  const auto rb = durand_kerner_roots(b);
  std::complex<double> prod = 1.0;
  for (const auto& x : ra) {
    for (const auto& y : rb) prod *= x - y;
  }
  const double lead_a = a.leading().to_double();
  const double lead_b = b.leading().to_double();
  prod *= std::pow(lead_a, static_cast<double>(rb.size()));
  prod *= std::pow(lead_b, static_cast<double>(ra.size()));
  return prod.real();
}

}  // namespace

TEST_CASE("Sylvester matrix layout") {
  // A = x^2 - 1 (d=2), B = x - 1 (e=1): one column of A-coefficients, two of B.
  const auto m = sylvester_matrix(upoly("x", {-1, 0, 1}), upoly("x", {-1, 1}));
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 3);
  CHECK(m.at(0, 0) == Rational(1));
  CHECK(m.at(1, 0) == Rational(0));
  CHECK(m.at(2, 0) == Rational(-1));
  CHECK(m.at(0, 1) == Rational(1));
  CHECK(m.at(1, 1) == Rational(-1));
  CHECK(m.at(2, 1) == Rational(0));
  CHECK(m.at(0, 2) == Rational(0));
  CHECK(m.at(1, 2) == Rational(1));
  CHECK(m.at(2, 2) == Rational(-1));

  // Dimension: deg 6 against deg 5 gives an 11x11 matrix.
  std::mt19937 rng(3);
  UniPoly a6 = random_nonzero_unipoly(rng, "x", 6);
  while (*a6.degree() != 6) a6 = random_nonzero_unipoly(rng, "x", 6);
  UniPoly b5 = random_nonzero_unipoly(rng, "x", 5);
  while (*b5.degree() != 5) b5 = random_nonzero_unipoly(rng, "x", 5);
  CHECK(sylvester_matrix(a6, b5).rows() == 11);

  CHECK_THROWS_AS(sylvester_matrix(UniPoly::constant(2), UniPoly::constant(3)), DomainError);
  CHECK_THROWS_AS(sylvester_matrix(UniPoly::zero("x"), upoly("x", {1, 1})), DomainError);
}

TEST_CASE("Sylvester over polynomial entries feeds the discriminant") {
  // q against dq/dE: 7x7 over UniPoly in lambda; its Bareiss determinant,
  // signed per the discriminant definition, must give the golden value.
  const BiPoly q = golden_q();
  const auto m = sylvester_matrix(q, q.derivative_outer());
  REQUIRE(m.rows() == 7);
  const UniPolyOps ops{"lambda"};
  const UniPoly det = determinant_bareiss(ops, m);
  // d = 4: (-1)^(d(d-1)/2) = +1 and the leading coefficient is 1.
  CHECK(det == upoly("lambda", {0, 0, 0, 0, 1296, 1296, 0, 1296, 1296}));
}

TEST_CASE("Bareiss determinant basics") {
  const RationalOps ops;
  Matrix<Rational> identity(4, 4, 0);
  for (std::size_t i = 0; i < 4; ++i) identity.at(i, i) = 1;
  CHECK(determinant_bareiss(ops, identity) == Rational(1));

  Matrix<Rational> swap(2, 2, 0);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  CHECK(determinant_bareiss(ops, swap) == Rational(-1));

  Matrix<Rational> rect(2, 3, 0);
  CHECK_THROWS_AS(determinant_bareiss(ops, rect), DomainError);
}

TEST_CASE("Bareiss equals cofactor expansion on random integer matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(-9, 9);
  const RationalOps ops;
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      Matrix<Rational> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
      }
      CHECK(determinant_bareiss(ops, m) == cofactor_determinant(m));
    }
  }
}

TEST_CASE("resultant small cases") {
  CHECK(resultant(upoly("x", {-2, 1}), upoly("x", {-5, 1})) == Rational(-3));
  CHECK(resultant(upoly("x", {-1, 0, 1}), upoly("x", {-1, 1})) == Rational(0));
  CHECK(resultant(upoly("x", {7}), upoly("x", {1, 2, 3})) == Rational(49));
  CHECK_THROWS_AS(resultant(UniPoly::zero("x"), upoly("x", {1, 1})), DomainError);
}

TEST_CASE("resultant: PRS equals Sylvester/Bareiss and the root-product oracle") {
  std::mt19937 rng(2718);
  int checked = 0;
  while (checked < 200) {
    const UniPoly a = random_nonzero_unipoly(rng, "x", 5);
    const UniPoly b = random_nonzero_unipoly(rng, "x", 5);
    const Rational via_prs = resultant(a, b);
    const Rational via_sylvester = resultant_sylvester(a, b);
    CHECK(via_prs == via_sylvester);

    // Numeric oracle needs well-separated roots; is_zero guards exact ties.
    if (*a.degree() >= 1 && *b.degree() >= 1 && !via_prs.is_zero()) {
      const double oracle = root_product_resultant(a, b);
      const double exact = via_prs.to_double();
      CHECK(std::abs(oracle - exact) / std::abs(exact) <= 1e-8);
    }
    ++checked;
  }
}

TEST_CASE("resultant over the bivariate ring matches on both routes") {
  std::mt19937 rng(500);
  for (int trial = 0; trial < 40; ++trial) {
    const BiPoly a = random_bipoly(rng, "E", "lambda", 3, 2, 3);
    const BiPoly b = random_bipoly(rng, "E", "lambda", 3, 2, 3);
    if (a.is_constant_in_outer() && b.is_constant_in_outer()) continue;
    CHECK(resultant(a, b) == resultant_sylvester(a, b));
  }
}

TEST_CASE("discriminant of a quadratic") {
  // x^2 + 3x + 2: b^2 - 4c = 1.
  CHECK(discriminant(upoly("x", {2, 3, 1})) == Rational(1));
  // General random quadratics against b^2 - 4ac.
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const long a = coeff(rng) == 0 ? 1 : coeff(rng);
    const long b = coeff(rng);
    const long c = coeff(rng);
    if (a == 0) continue;
    CHECK(discriminant(upoly("x", {c, b, a})) == Rational(b * b - 4 * a * c));
  }
  CHECK_THROWS_AS(discriminant(UniPoly::constant(3)), DomainError);
}

TEST_CASE("golden discriminants: the vanishing pathology and its cure") {
  CHECK(discriminant(golden_p()).is_zero());
  CHECK(discriminant(golden_q()) ==
        upoly("lambda", {0, 0, 0, 0, 1296, 1296, 0, 1296, 1296}));
}

TEST_CASE("discriminant detects repeated roots") {
  // Squared-difference form of the discriminant on random square-free inputs.
  std::mt19937 rng(1234);
  int checked = 0;
  while (checked < 60) {
    const UniPoly a = random_nonzero_unipoly(rng, "x", 5);
    if (*a.degree() < 2) continue;
    if (!UniPoly::gcd(a, a.derivative()).is_constant()) continue;  // need square-free
    const int d = *a.degree();
    const auto roots = durand_kerner_roots(a);
    std::complex<double> prod = 1.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        const auto diff = roots[i] - roots[j];
        prod *= diff * diff;
      }
    }
    const double lead = a.leading().to_double();
    const double oracle = (std::pow(lead, 2 * d - 2) * prod).real();
    const double exact = discriminant(a).to_double();
    CHECK(rel_error(oracle, exact) <= 1e-8);
    ++checked;
  }

  // Repeated-root detection: Disc(A^2 B) = 0, Disc(A B) != 0 for coprime
  // square-free A, B.
  int pairs = 0;
  while (pairs < 40) {
    const UniPoly a = random_nonzero_unipoly(rng, "x", 3);
    const UniPoly b = random_nonzero_unipoly(rng, "x", 3);
    if (a.is_constant() || b.is_constant()) continue;
    if (!UniPoly::gcd(a, a.derivative()).is_constant()) continue;
    if (!UniPoly::gcd(b, b.derivative()).is_constant()) continue;
    if (!UniPoly::gcd(a, b).is_constant()) continue;
    CHECK(discriminant(a * a * b).is_zero());
    CHECK(!discriminant(a * b).is_zero());
    ++pairs;
  }
}
