#include "paramspec/parametric_matrix.hpp"

#include <utility>

#include "paramspec/elimination.hpp"
#include "paramspec/errors.hpp"

namespace paramspec {

namespace {

struct BiPolyOps {
  using Elem = BiPoly;
  std::string outer;
  std::string inner;
  Elem zero() const { return BiPoly::zero(outer, inner); }
  Elem one() const { return BiPoly::constant(outer, inner, UniPoly::constant(1)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem exact_div(const Elem& a, const Elem& b) const { return a.exact_div(b); }
};

}  // namespace

ParametricMatrix ParametricMatrix::build(int n, const std::vector<Entry>& entries,
                                         std::string parameter) {
  if (n < 1) throw ValidationError("ParametricMatrix: dimension must be >= 1");
  std::vector<UniPoly> grid(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<bool> set(grid.size(), false);
  auto idx = [n](int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
  };
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n) {
      throw ValidationError("ParametricMatrix: entry (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + ") out of range for n=" + std::to_string(n));
    }
    if (!e.value.is_constant() && e.value.var() != parameter) {
      throw ValidationError("ParametricMatrix: entry (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + ") uses variable \"" + e.value.var() +
                            "\", expected \"" + parameter + "\"");
    }
    for (auto [r, c] : {std::pair{e.i, e.j}, std::pair{e.j, e.i}}) {
      if (set[idx(r, c)] && grid[idx(r, c)] != e.value) {
        throw ValidationError("ParametricMatrix: conflicting symmetric entries at (" +
                              std::to_string(e.i) + "," + std::to_string(e.j) + "): " +
                              grid[idx(r, c)].to_string() + " vs " + e.value.to_string());
      }
      grid[idx(r, c)] = e.value;
      set[idx(r, c)] = true;
    }
  }
  return ParametricMatrix(n, std::move(parameter), std::move(grid));
}

const UniPoly& ParametricMatrix::entry(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
}

BiPoly ParametricMatrix::char_poly() const {
  const BiPolyOps ops{kEnergyVar, parameter_};
  Matrix<BiPoly> m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_), ops.zero());
  const BiPoly minus_e = BiPoly::monomial(kEnergyVar, parameter_, UniPoly::constant(-1), 1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      BiPoly cell = BiPoly::constant(kEnergyVar, parameter_, entry(i, j));
      if (i == j) cell = cell + minus_e;
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::move(cell);
    }
  }
  BiPoly det = determinant_bareiss(ops, std::move(m));
  if (n_ % 2 != 0) det = -det;
  if (det.degree() != n_ || det.leading() != UniPoly::constant(1)) {
    throw InternalFault("char_poly: result is not monic of degree n");
  }
  return det;
}

BiPoly ParametricMatrix::reduced_char_poly() const { return char_poly().square_free_part(); }

DegeneracyProfile ParametricMatrix::degeneracy_profile() const {
  DegeneracyProfile profile;
  auto decomposition = char_poly().square_free_decomposition();
  for (auto& term : decomposition.factors) {
    const int e_degree = term.factor.degree().value_or(0);
    profile.branches.push_back({std::move(term.factor), term.multiplicity, e_degree});
    if (term.multiplicity >= 2) profile.persistent_degeneracy = true;
  }
  return profile;
}

Matrix<Rational> ParametricMatrix::eval_at_exact(const Rational& value) const {
  Matrix<Rational> m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(i, j).eval(value);
    }
  }
  return m;
}

Matrix<double> ParametricMatrix::eval_at(const Rational& value) const {
  Matrix<double> m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          entry(i, j).eval(value).to_double();
    }
  }
  return m;
}

Matrix<double> ParametricMatrix::eval_at(double value) const {
  Matrix<double> m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(i, j).eval(value);
    }
  }
  return m;
}

ParametricMatrix ParametricMatrix::frozen_at(const Rational& value) const {
  std::vector<UniPoly> frozen;
  frozen.reserve(entries_.size());
  for (const auto& e : entries_) frozen.push_back(UniPoly::constant(e.eval(value)));
  return ParametricMatrix(n_, parameter_, std::move(frozen));
}

}  // namespace paramspec
