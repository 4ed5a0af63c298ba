#include "paramspec/sturm.hpp"

#include <algorithm>

#include "paramspec/errors.hpp"

namespace paramspec {

namespace {

// Sturm chain of a square-free polynomial. Remainders are rescaled by a
// positive rational only, which leaves the sign-variation counts intact.
std::vector<UniPoly> sturm_chain(const UniPoly& s) {
  std::vector<UniPoly> chain{s, s.derivative()};
  while (!chain.back().is_zero() && !chain.back().is_constant()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    UniPoly r = -(a.divmod(b).second);
    if (!r.is_zero()) r = r * (Rational(1) / r.content());
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// 1 + max |a_i / a_d|: every real root lies strictly inside (-bound, bound).
Rational cauchy_bound(const UniPoly& p) {
  Rational bound = 1;
  const Rational lead = p.leading().abs();
  for (const auto& c : p.coeffs()) {
    const Rational ratio = c.abs() / lead;
    if (ratio > bound) bound = ratio;
  }
  return bound + 1;
}

struct Interval {
  Rational lo, hi;
  int v_lo, v_hi;  // sign variations at the endpoints
};

}  // namespace

std::vector<RealRoot> sturm_real_roots(const UniPoly& a, const Rational& tol) {
  if (a.is_zero() || a.is_constant()) {
    throw DomainError("sturm_real_roots: input must have degree >= 1");
  }
  if (tol <= Rational(0)) throw DomainError("sturm_real_roots: tolerance must be positive");

  const auto decomposition = a.square_free_decomposition();
  const UniPoly s = a.square_free_part();
  const auto chain = sturm_chain(s);

  const auto variations = [&chain](const Rational& x) { return sign_variations(chain, x); };

  std::vector<RealRoot> roots;
  const auto record_exact = [&](const Rational& at) {
    RealRoot r;
    r.lower = at;
    r.upper = at;
    r.value = at.to_double();
    r.exact = true;
    roots.push_back(std::move(r));
  };

  std::vector<Interval> work;
  {
    const Rational bound = cauchy_bound(s);
    const Rational lo = -bound;
    work.push_back({lo, bound, variations(lo), variations(bound)});
  }

  std::vector<Interval> isolated;
  while (!work.empty()) {
    Interval cur = work.back();
    work.pop_back();
    const int count = cur.v_lo - cur.v_hi;
    if (count <= 0) continue;
    if (count == 1) {
      isolated.push_back(cur);
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / 2;
    if (s.eval(mid).is_zero()) {
      record_exact(mid);
      // Shrink a symmetric gap around mid until it contains no other root
      // and has nonzero endpoints, then continue on both sides.
      Rational delta = (cur.hi - cur.lo) / 4;
      for (;;) {
        const Rational left = mid - delta;
        const Rational right = mid + delta;
        if (!s.eval(left).is_zero() && !s.eval(right).is_zero() &&
            variations(left) - variations(right) == 1) {
          work.push_back({cur.lo, left, cur.v_lo, variations(left)});
          work.push_back({right, cur.hi, variations(right), cur.v_hi});
          break;
        }
        delta = delta / 2;
      }
    } else {
      const int v_mid = variations(mid);
      work.push_back({cur.lo, mid, cur.v_lo, v_mid});
      work.push_back({mid, cur.hi, v_mid, cur.v_hi});
    }
  }

  // Refine each isolating interval by bisection; the square-free part has a
  // simple root there, so the endpoint signs differ until the root is hit.
  for (Interval cur : isolated) {
    bool exact_hit = false;
    while (cur.hi - cur.lo > tol) {
      const Rational mid = (cur.lo + cur.hi) / 2;
      const int sm = s.eval(mid).sign();
      if (sm == 0) {
        record_exact(mid);
        exact_hit = true;
        break;
      }
      if (s.eval(cur.lo).sign() == sm) {
        cur.lo = mid;
      } else {
        cur.hi = mid;
      }
    }
    if (exact_hit) continue;
    RealRoot r;
    r.lower = cur.lo;
    r.upper = cur.hi;
    r.value = ((cur.lo + cur.hi) / 2).to_double();
    r.exact = false;
    roots.push_back(std::move(r));
  }

  // Multiplicity: each distinct root belongs to exactly one square-free
  // factor; test by exact evaluation (degenerate interval) or sign change.
  for (auto& root : roots) {
    root.multiplicity = 0;
    for (const auto& term : decomposition.factors) {
      bool contains;
      if (root.exact) {
        contains = term.factor.eval(root.lower).is_zero();
      } else {
        contains = term.factor.eval(root.lower).sign() != term.factor.eval(root.upper).sign();
      }
      if (contains) {
        root.multiplicity = term.multiplicity;
        break;
      }
    }
    if (root.multiplicity == 0) throw InternalFault("sturm_real_roots: root lost its factor");
  }

  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& x, const RealRoot& y) { return x.lower < y.lower; });
  return roots;
}

}  // namespace paramspec
