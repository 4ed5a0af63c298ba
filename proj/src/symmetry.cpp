#include "paramspec/symmetry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "paramspec/errors.hpp"

namespace paramspec {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.images.resize(static_cast<std::size_t>(n));
  p.signs.assign(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) p.images[static_cast<std::size_t>(i)] = i;
  return p;
}

bool SignedPermutation::is_identity() const { return *this == identity(dim()); }

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (dim() != other.dim()) throw DomainError("SignedPermutation: dimension mismatch");
  SignedPermutation out;
  const std::size_t n = images.size();
  out.images.resize(n);
  out.signs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int mid = other.images[i];
    out.images[i] = images[static_cast<std::size_t>(mid)];
    out.signs[i] = other.signs[i] * signs[static_cast<std::size_t>(mid)];
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  const std::size_t n = images.size();
  out.images.resize(n);
  out.signs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.images[static_cast<std::size_t>(images[i])] = static_cast<int>(i);
    out.signs[static_cast<std::size_t>(images[i])] = signs[i];
  }
  return out;
}

int SignedPermutation::order() const {
  SignedPermutation acc = *this;
  int k = 1;
  while (!acc.is_identity()) {
    acc = acc.compose(*this);
    ++k;
    if (k > 1 << 20) throw InternalFault("SignedPermutation: runaway order computation");
  }
  return k;
}

Matrix<Rational> SignedPermutation::matrix() const {
  const std::size_t n = images.size();
  Matrix<Rational> m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(static_cast<std::size_t>(images[i]), i) = signs[i];
  }
  return m;
}

bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.images != b.images) return a.images < b.images;
  return a.signs > b.signs;  // +1 sorts before -1
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) os << ' ';
    if (signs[i] < 0) os << '-';
    os << images[i] + 1;  // 1-based, matching the document convention
  }
  os << ')';
  return os.str();
}

bool commutes(const ParametricMatrix& h, const SignedPermutation& u) {
  if (u.dim() != h.dim()) throw DomainError("commutes: dimension mismatch");
  const int n = h.dim();
  // (U^T H U)_{ij} = s_i s_j H_{images(i), images(j)}
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto& target = h.entry(i, j);
      const auto& source = h.entry(u.images[static_cast<std::size_t>(i)],
                                   u.images[static_cast<std::size_t>(j)]);
      const int sign = u.signs[static_cast<std::size_t>(i)] * u.signs[static_cast<std::size_t>(j)];
      if (sign > 0) {
        if (source != target) return false;
      } else {
        if (-source != target) return false;
      }
    }
  }
  return true;
}

namespace {

// Depth-first scan over images (and signs), pruning as soon as an assigned
// pair violates the conjugation identity.
struct SymmetrySearch {
  const ParametricMatrix& h;
  const bool with_signs;
  int n;
  std::vector<int> images;
  std::vector<int> signs;
  std::vector<bool> used;
  std::vector<SignedPermutation> found;

  explicit SymmetrySearch(const ParametricMatrix& matrix, bool signed_search)
      : h(matrix), with_signs(signed_search), n(matrix.dim()) {
    images.assign(static_cast<std::size_t>(n), -1);
    signs.assign(static_cast<std::size_t>(n), 1);
    used.assign(static_cast<std::size_t>(n), false);
  }

  bool consistent_at(int k) const {
    for (int i = 0; i <= k; ++i) {
      const auto& target = h.entry(i, k);
      const auto& source = h.entry(images[static_cast<std::size_t>(i)],
                                   images[static_cast<std::size_t>(k)]);
      const int sign = signs[static_cast<std::size_t>(i)] * signs[static_cast<std::size_t>(k)];
      if (sign > 0) {
        if (source != target) return false;
      } else {
        if (-source != target) return false;
      }
    }
    return true;
  }

  void extend(int k) {
    if (k == n) {
      found.push_back({images, signs});
      return;
    }
    for (int candidate = 0; candidate < n; ++candidate) {
      if (used[static_cast<std::size_t>(candidate)]) continue;
      used[static_cast<std::size_t>(candidate)] = true;
      images[static_cast<std::size_t>(k)] = candidate;
      for (const int sign : with_signs ? std::vector<int>{1, -1} : std::vector<int>{1}) {
        signs[static_cast<std::size_t>(k)] = sign;
        if (consistent_at(k)) extend(k + 1);
      }
      signs[static_cast<std::size_t>(k)] = 1;
      used[static_cast<std::size_t>(candidate)] = false;
    }
    images[static_cast<std::size_t>(k)] = -1;
  }
};

}  // namespace

std::vector<SignedPermutation> find_symmetries(const ParametricMatrix& h,
                                               const SymmetryOptions& options) {
  if (h.dim() > options.max_dimension) {
    throw CapabilityError(
        "find_symmetries: dimension " + std::to_string(h.dim()) + " exceeds the exhaustive " +
        "search bound " + std::to_string(options.max_dimension) +
        "; verify candidate generators with commutes() and close them with group_closure()");
  }
  SymmetrySearch search(h, options.signed_search);
  search.extend(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

SymmetryGroup group_closure(const std::vector<SignedPermutation>& generators,
                            const SymmetryOptions& options) {
  int n = 0;
  for (const auto& g : generators) {
    if (n == 0) n = g.dim();
    if (g.dim() != n) throw DomainError("group_closure: generator dimensions differ");
  }
  if (n == 0) n = 1;  // empty generating set: the trivial group on one point

  std::map<SignedPermutation, int> index;
  std::vector<SignedPermutation> elements;
  auto add = [&](const SignedPermutation& p) {
    if (index.emplace(p, static_cast<int>(elements.size())).second) {
      elements.push_back(p);
      if (static_cast<int>(elements.size()) > options.max_group_size) {
        throw CapabilityError("group_closure: closure exceeds " +
                              std::to_string(options.max_group_size) + " elements");
      }
      return true;
    }
    return false;
  };

  std::vector<SignedPermutation> seeds;
  for (const auto& g : generators) {
    seeds.push_back(g);
    seeds.push_back(g.inverse());
  }
  add(SignedPermutation::identity(n));
  for (const auto& s : seeds) add(s);
  // Breadth-first right multiplication by the seed set reaches every word in
  // the generators; elements grows while qi catches up.
  for (std::size_t qi = 0; qi < elements.size(); ++qi) {
    for (const auto& s : seeds) {
      add(elements[qi].compose(s));
    }
  }

  SymmetryGroup group;
  group.elements = elements;
  std::sort(group.elements.begin(), group.elements.end());
  const int size = group.order();
  group.cayley.assign(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size), -1));
  std::map<SignedPermutation, int> sorted_index;
  for (int i = 0; i < size; ++i) sorted_index.emplace(group.elements[static_cast<std::size_t>(i)], i);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const auto product = group.elements[static_cast<std::size_t>(i)].compose(
          group.elements[static_cast<std::size_t>(j)]);
      const auto it = sorted_index.find(product);
      if (it == sorted_index.end()) throw InternalFault("group_closure: table not closed");
      group.cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
    }
  }
  for (int i = 0; i < size && group.abelian; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (group.cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          group.cayley[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        group.abelian = false;
        break;
      }
    }
  }
  return group;
}

SymmetryReport symmetry_report(const ParametricMatrix& h, const SymmetryOptions& options) {
  SymmetryReport report;
  report.group = group_closure(find_symmetries(h, options), options);
  report.degeneracy_expected = !report.group.abelian;
  report.degeneracy_observed = h.degeneracy_profile().persistent_degeneracy;
  if (report.degeneracy_expected == report.degeneracy_observed) {
    report.consistent = true;
    report.note = report.degeneracy_expected
                      ? "persistent degeneracy consistent with the nonabelian symmetry group"
                      : "no persistent degeneracy; detected symmetry group is abelian";
  } else if (report.degeneracy_observed) {
    report.consistent = false;
    report.note = "degeneracy not explained by detected permutation symmetries";
  } else {
    report.consistent = false;
    report.note = "nonabelian symmetry group but no persistent degeneracy observed";
  }
  return report;
}

}  // namespace paramspec
