#include "paramspec/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "paramspec/errors.hpp"

namespace paramspec {

namespace {

using Complex = std::complex<double>;

Complex horner(const std::vector<double>& coeffs, const Complex& z) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double backward_error_scale(const std::vector<double>& coeffs, const Complex& z) {
  const double az = std::abs(z);
  double scale = 0.0;
  double pow = 1.0;
  for (const double c : coeffs) {
    scale += std::abs(c) * pow;
    pow *= az;
  }
  return scale > 0.0 ? scale : 1.0;
}

// Aberth-Ehrlich on a square-free factor given by double coefficients
// (lowest power first, leading nonzero).
std::vector<Complex> aberth_square_free(const std::vector<double>& coeffs, double tol,
                                        int max_iterations) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<double> deriv(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) deriv[static_cast<std::size_t>(k - 1)] = k * coeffs[static_cast<std::size_t>(k)];

  // Deterministic start: perturbed circle around the root centroid.
  const double lead = coeffs.back();
  const Complex centroid = n > 0 ? Complex(-coeffs[static_cast<std::size_t>(n - 1)] / lead / n, 0.0) : Complex(0.0);
  double radius = 0.0;
  for (int k = 0; k < n; ++k) {
    const double r = std::pow(std::abs(coeffs[static_cast<std::size_t>(k)] / lead),
                              1.0 / static_cast<double>(n - k));
    radius = std::max(radius, r);
  }
  radius = std::max(0.5, 1.2 * radius);

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.45;
    z[static_cast<std::size_t>(k)] = centroid + radius * Complex(std::cos(angle), std::sin(angle));
  }

  // A root is frozen once its correction is negligible or its residual
  // reaches the backward-error noise floor of double evaluation; frozen
  // roots still repel the others.
  constexpr double kResidualFloor = 1e-14;
  std::vector<bool> frozen(static_cast<std::size_t>(n), false);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all_frozen = true;
    for (int k = 0; k < n; ++k) {
      if (frozen[static_cast<std::size_t>(k)]) continue;
      const Complex zk = z[static_cast<std::size_t>(k)];
      const Complex pv = horner(coeffs, zk);
      if (std::abs(pv) <= kResidualFloor * backward_error_scale(coeffs, zk)) {
        frozen[static_cast<std::size_t>(k)] = true;
        continue;
      }
      all_frozen = false;
      const Complex dv = horner(deriv, zk);
      Complex newton;
      if (dv == Complex(0.0)) {
        // Degenerate derivative point: nudge deterministically.
        newton = Complex(tol, tol);
      } else {
        newton = pv / dv;
      }
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
      }
      const Complex denom = 1.0 - newton * repulsion;
      const Complex step = denom == Complex(0.0) ? newton : newton / denom;
      z[static_cast<std::size_t>(k)] = zk - step;
      if (std::abs(step) <= tol * (1.0 + std::abs(zk))) {
        frozen[static_cast<std::size_t>(k)] = true;
      }
    }
    if (all_frozen) return z;
  }

  std::vector<double> residuals;
  residuals.reserve(static_cast<std::size_t>(n));
  bool acceptable = true;
  for (const auto& zk : z) {
    const double residual = std::abs(horner(coeffs, zk)) / backward_error_scale(coeffs, zk);
    residuals.push_back(residual);
    if (residual > kResidualFloor) acceptable = false;
  }
  if (acceptable) return z;  // every root sits on the noise floor already
  throw NumericError("complex_roots: Aberth iteration did not converge", residuals);
}

// Pair conjugates and average them; snap near-real roots onto the axis.
void enforce_conjugate_symmetry(std::vector<Complex>& roots) {
  constexpr double kRealSnap = 1e-12;
  for (auto& z : roots) {
    if (std::abs(z.imag()) <= kRealSnap * (1.0 + std::abs(z.real()))) z = Complex(z.real(), 0.0);
  }
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i] || roots[i].imag() <= 0.0) continue;
    std::size_t best = roots.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j] || j == i || roots[j].imag() >= 0.0) continue;
      const double d = std::abs(std::conj(roots[j]) - roots[i]);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == roots.size()) continue;
    const Complex avg = 0.5 * (roots[i] + std::conj(roots[best]));
    roots[i] = avg;
    roots[best] = std::conj(avg);
    used[i] = used[best] = true;
  }
}

}  // namespace

std::vector<ComplexRoot> complex_roots(const UniPoly& a, double tol) {
  if (a.is_zero() || a.is_constant()) {
    throw DomainError("complex_roots: input must have degree >= 1");
  }
  constexpr int kMaxIterations = 500;

  std::vector<ComplexRoot> out;
  const auto decomposition = a.square_free_decomposition();
  for (const auto& term : decomposition.factors) {
    std::vector<double> coeffs;
    coeffs.reserve(term.factor.coeffs().size());
    for (const auto& c : term.factor.coeffs()) coeffs.push_back(c.to_double());
    auto roots = aberth_square_free(coeffs, tol, kMaxIterations);
    enforce_conjugate_symmetry(roots);
    for (const auto& z : roots) {
      ComplexRoot root;
      root.value = z;
      root.residual = std::abs(horner(coeffs, z)) / backward_error_scale(coeffs, z);
      for (int m = 0; m < term.multiplicity; ++m) out.push_back(root);
    }
  }
  std::sort(out.begin(), out.end(), [](const ComplexRoot& x, const ComplexRoot& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return out;
}

}  // namespace paramspec
