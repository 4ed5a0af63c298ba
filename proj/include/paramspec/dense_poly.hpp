#ifndef PARAMSPEC_DENSE_POLY_HPP
#define PARAMSPEC_DENSE_POLY_HPP

#include <utility>
#include <vector>

#include "paramspec/errors.hpp"

// Dense-coefficient polynomial algorithms over an abstract coefficient ring.
// A polynomial is a std::vector<Elem>, index = power, no trailing zeros
// (the zero polynomial is the empty vector). The Ops object supplies ring
// arithmetic plus the canonicalization hooks the normalization conventions
// need:
//
//   Elem zero(), one(), from_int(n)
//   bool is_zero(a), equal(a, b), negative(a)   -- sign per the convention
//   Elem add(a,b), sub(a,b), mul(a,b), neg(a)
//   Elem exact_div(a, b)        -- throws InternalFault when not exact
//   Elem content_gcd(a, b)      -- canonically positive; gcd with 0 is |other|
//   Elem poly_content_gcd(a, b) -- content contribution to polynomial gcd
//                                  (one() over a field, content_gcd over a
//                                   polynomial coefficient ring)
//
// Instantiated twice: Rational coefficients (univariate) and UniPoly
// coefficients (bivariate, eliminating the outer variable).

namespace paramspec::dense {

template <class Ops>
using Coeffs = std::vector<typename Ops::Elem>;

template <class Ops>
void trim(const Ops& R, Coeffs<Ops>& a) {
  while (!a.empty() && R.is_zero(a.back())) a.pop_back();
}

template <class Ops>
bool is_zero(const Ops&, const Coeffs<Ops>& a) {
  return a.empty();
}

// Degree of a nonzero polynomial; callers check for zero first.
template <class Ops>
int degree(const Coeffs<Ops>& a) {
  if (a.empty()) throw InternalFault("dense: degree of zero polynomial");
  return static_cast<int>(a.size()) - 1;
}

template <class Ops>
const typename Ops::Elem& leading(const Coeffs<Ops>& a) {
  if (a.empty()) throw InternalFault("dense: leading coefficient of zero polynomial");
  return a.back();
}

template <class Ops>
typename Ops::Elem elem_pow(const Ops& R, typename Ops::Elem base, unsigned e) {
  auto result = R.one();
  while (e > 0) {
    if (e & 1u) result = R.mul(result, base);
    base = R.mul(base, base);
    e >>= 1u;
  }
  return result;
}

template <class Ops>
Coeffs<Ops> add(const Ops& R, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
  Coeffs<Ops> out(std::max(a.size(), b.size()), R.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = R.add(out[i], b[i]);
  trim(R, out);
  return out;
}

template <class Ops>
Coeffs<Ops> sub(const Ops& R, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
  Coeffs<Ops> out(std::max(a.size(), b.size()), R.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = R.sub(out[i], b[i]);
  trim(R, out);
  return out;
}

template <class Ops>
Coeffs<Ops> neg(const Ops& R, const Coeffs<Ops>& a) {
  Coeffs<Ops> out = a;
  for (auto& c : out) c = R.neg(c);
  return out;
}

template <class Ops>
Coeffs<Ops> mul(const Ops& R, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs<Ops> out(a.size() + b.size() - 1, R.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (R.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = R.add(out[i + j], R.mul(a[i], b[j]));
    }
  }
  trim(R, out);
  return out;
}

template <class Ops>
Coeffs<Ops> scale(const Ops& R, const Coeffs<Ops>& a, const typename Ops::Elem& c) {
  if (R.is_zero(c)) return {};
  Coeffs<Ops> out = a;
  for (auto& x : out) x = R.mul(x, c);
  return out;
}

// a * c * x^k
template <class Ops>
Coeffs<Ops> scale_shift(const Ops& R, const Coeffs<Ops>& a, const typename Ops::Elem& c, int k) {
  if (a.empty() || R.is_zero(c)) return {};
  Coeffs<Ops> out(a.size() + static_cast<std::size_t>(k), R.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = R.mul(a[i], c);
  return out;
}

template <class Ops>
Coeffs<Ops> derivative(const Ops& R, const Coeffs<Ops>& a) {
  if (a.size() <= 1) return {};
  Coeffs<Ops> out(a.size() - 1, R.zero());
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = R.mul(a[i], R.from_int(static_cast<long>(i)));
  }
  trim(R, out);
  return out;
}

template <class Ops>
bool equal(const Ops& R, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!R.equal(a[i], b[i])) return false;
  }
  return true;
}

// Exact long division: every leading-coefficient division and the final
// remainder must vanish exactly; anything else is an InternalFault, since
// all call sites divide by known factors.
template <class Ops>
Coeffs<Ops> exact_div(const Ops& R, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
  if (b.empty()) throw InternalFault("dense: exact division by zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw InternalFault("dense: inexact division (degree)");
  Coeffs<Ops> rem = a;
  Coeffs<Ops> quot(a.size() - b.size() + 1, R.zero());
  while (!rem.empty() && rem.size() >= b.size()) {
    const int k = static_cast<int>(rem.size() - b.size());
    auto q = R.exact_div(rem.back(), b.back());
    quot[k] = q;
    rem = sub(R, rem, scale_shift(R, b, q, k));
    if (static_cast<int>(rem.size()) - 1 >= k + static_cast<int>(b.size()) - 1) {
      throw InternalFault("dense: division failed to reduce degree");
    }
  }
  if (!rem.empty()) throw InternalFault("dense: inexact division (nonzero remainder)");
  trim(R, quot);
  return quot;
}

template <class Ops>
Coeffs<Ops> exact_div_elem(const Ops& R, const Coeffs<Ops>& a, const typename Ops::Elem& c) {
  Coeffs<Ops> out = a;
  for (auto& x : out) x = R.exact_div(x, c);
  return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b. The standard
// multiplier, sign included, which the subresultant bookkeeping relies on.
template <class Ops>
Coeffs<Ops> prem(const Ops& R, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
  if (b.empty()) throw InternalFault("dense: pseudo-remainder by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) {
    // multiplier power is deg a - deg b + 1 <= 0; by convention prem = lc(b)^e * a with e = 0
    return a;
  }
  const auto& d = b.back();
  int e = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
  Coeffs<Ops> rem = a;
  while (!rem.empty() && rem.size() >= b.size()) {
    const int k = static_cast<int>(rem.size() - b.size());
    rem = sub(R, scale(R, rem, d), scale_shift(R, b, rem.back(), k));
    --e;
  }
  if (e > 0) rem = scale(R, rem, elem_pow(R, d, static_cast<unsigned>(e)));
  trim(R, rem);
  return rem;
}

// Content: canonically positive fold of content_gcd over the coefficients.
template <class Ops>
typename Ops::Elem content(const Ops& R, const Coeffs<Ops>& a) {
  if (a.empty()) throw InternalFault("dense: content of zero polynomial");
  auto c = R.zero();
  for (const auto& x : a) {
    if (R.is_zero(x)) continue;
    c = R.content_gcd(c, x);
  }
  return c;
}

// A = content * primitive with the primitive part carrying a positive
// leading coefficient; the content takes the sign.
template <class Ops>
std::pair<typename Ops::Elem, Coeffs<Ops>> signed_content_primitive(const Ops& R,
                                                                    const Coeffs<Ops>& a) {
  auto c = content(R, a);
  if (R.negative(leading<Ops>(a))) c = R.neg(c);
  return {c, exact_div_elem(R, a, c)};
}

// Flip the sign when the leading coefficient is negative per the convention.
template <class Ops>
Coeffs<Ops> make_leading_positive(const Ops& R, Coeffs<Ops> a) {
  if (!a.empty() && R.negative(a.back())) return neg(R, a);
  return a;
}

namespace detail {

// Subresultant PRS on primitive inputs with deg a >= deg b >= 1.
// Returns the last nonzero remainder, primitivized with positive leading
// coefficient (a constant gcd comes back as {one}).
template <class Ops>
Coeffs<Ops> prs_gcd(const Ops& R, Coeffs<Ops> a, Coeffs<Ops> b) {
  auto g = R.one();
  auto h = R.one();
  for (;;) {
    const int delta = degree<Ops>(a) - degree<Ops>(b);
    Coeffs<Ops> r = prem(R, a, b);
    if (r.empty()) {
      return signed_content_primitive(R, b).second;
    }
    if (r.size() == 1) {
      return {R.one()};
    }
    a = std::move(b);
    b = exact_div_elem(R, r, R.mul(g, elem_pow(R, h, static_cast<unsigned>(delta))));
    g = leading<Ops>(a);
    h = delta == 0 ? h
                   : R.exact_div(elem_pow(R, g, static_cast<unsigned>(delta)),
                                 elem_pow(R, h, static_cast<unsigned>(delta - 1)));
  }
}

}  // namespace detail

// Normalized gcd: primitive with positive leading coefficient; the content
// contribution comes from poly_content_gcd (trivial over a field).
// Callers guarantee not both inputs are zero.
template <class Ops>
Coeffs<Ops> gcd(const Ops& R, const Coeffs<Ops>& a, const Coeffs<Ops>& b) {
  if (a.empty() && b.empty()) throw InternalFault("dense: gcd(0, 0)");
  if (a.empty()) {
    auto [c, pp] = signed_content_primitive(R, b);
    return scale(R, pp, R.poly_content_gcd(c, R.zero()));
  }
  if (b.empty()) {
    auto [c, pp] = signed_content_primitive(R, a);
    return scale(R, pp, R.poly_content_gcd(c, R.zero()));
  }
  auto [ca, pa] = signed_content_primitive(R, a);
  auto [cb, pb] = signed_content_primitive(R, b);
  const auto content_part = R.poly_content_gcd(ca, cb);
  Coeffs<Ops> pp_gcd;
  if (pa.size() < pb.size()) std::swap(pa, pb);
  if (pb.size() == 1) {
    pp_gcd = {R.one()};
  } else {
    pp_gcd = detail::prs_gcd(R, std::move(pa), std::move(pb));
  }
  auto out = scale(R, pp_gcd, content_part);
  trim(R, out);
  return out;
}

// Resultant by the subresultant PRS. Exact over any integral domain; the
// Sylvester-determinant route in the elimination module is the cross-check.
template <class Ops>
typename Ops::Elem resultant(const Ops& R, Coeffs<Ops> a, Coeffs<Ops> b) {
  if (a.empty() || b.empty()) throw InternalFault("dense: resultant of zero polynomial");
  if (a.size() == 1 && b.size() == 1) return R.one();
  if (a.size() == 1) return elem_pow(R, a[0], static_cast<unsigned>(degree<Ops>(b)));
  if (b.size() == 1) return elem_pow(R, b[0], static_cast<unsigned>(degree<Ops>(a)));

  bool negate = false;
  if (a.size() < b.size()) {
    if ((degree<Ops>(a) % 2) != 0 && (degree<Ops>(b) % 2) != 0) negate = !negate;
    std::swap(a, b);
  }
  auto [ca, pa] = signed_content_primitive(R, a);
  auto [cb, pb] = signed_content_primitive(R, b);
  auto t = R.mul(elem_pow(R, ca, static_cast<unsigned>(degree<Ops>(b))),
                 elem_pow(R, cb, static_cast<unsigned>(degree<Ops>(a))));
  a = std::move(pa);
  b = std::move(pb);

  auto g = R.one();
  auto h = R.one();
  for (;;) {
    const int da = degree<Ops>(a);
    const int db = degree<Ops>(b);
    const int delta = da - db;
    if ((da % 2) != 0 && (db % 2) != 0) negate = !negate;
    Coeffs<Ops> r = prem(R, a, b);
    if (r.empty()) return R.zero();  // positive-degree common factor
    a = std::move(b);
    b = exact_div_elem(R, r, R.mul(g, elem_pow(R, h, static_cast<unsigned>(delta))));
    g = leading<Ops>(a);
    h = delta == 0 ? h
                   : R.exact_div(elem_pow(R, g, static_cast<unsigned>(delta)),
                                 elem_pow(R, h, static_cast<unsigned>(delta - 1)));
    if (b.size() == 1) break;
  }
  const int da = degree<Ops>(a);
  auto res = R.exact_div(elem_pow(R, b[0], static_cast<unsigned>(da)),
                         elem_pow(R, h, static_cast<unsigned>(da - 1)));
  res = R.mul(res, t);
  return negate ? R.neg(res) : res;
}

// Square-free part: pp(a) / gcd(pp(a), pp(a)'), primitive, positive leading
// coefficient. Same distinct roots as a, all simple.
template <class Ops>
Coeffs<Ops> square_free_part(const Ops& R, const Coeffs<Ops>& a) {
  if (a.empty()) throw InternalFault("dense: square-free part of zero");
  auto pp = signed_content_primitive(R, a).second;
  if (pp.size() == 1) return {R.one()};
  auto g = gcd(R, pp, derivative(R, pp));
  if (g.size() == 1) return pp;
  auto part = exact_div(R, pp, g);
  return make_leading_positive(R, signed_content_primitive(R, part).second);
}

template <class Ops>
struct SquareFreeTerm {
  Coeffs<Ops> factor;
  int multiplicity;
};

template <class Ops>
struct SquareFreeResult {
  typename Ops::Elem content;  // a = content * prod factor^multiplicity, exactly
  std::vector<SquareFreeTerm<Ops>> factors;
};

// Yun's square-free decomposition. Factors are primitive with positive
// leading coefficients, pairwise coprime, each square-free; the content is
// recovered by exact division so reconstruction is exact in the ring.
template <class Ops>
SquareFreeResult<Ops> square_free_decomposition(const Ops& R, const Coeffs<Ops>& input) {
  if (input.empty()) throw InternalFault("dense: square-free decomposition of zero");
  SquareFreeResult<Ops> out;
  auto pp = signed_content_primitive(R, input).second;
  if (pp.size() > 1) {
    auto g = gcd(R, pp, derivative(R, pp));
    if (g.size() == 1) {
      out.factors.push_back({pp, 1});
    } else {
      Coeffs<Ops> b = exact_div(R, pp, g);
      Coeffs<Ops> c = exact_div(R, derivative(R, pp), g);
      Coeffs<Ops> d = sub(R, c, derivative(R, b));
      int i = 1;
      while (b.size() > 1) {
        Coeffs<Ops> fi = gcd(R, b, d);
        if (fi.size() > 1) out.factors.push_back({fi, i});
        b = exact_div(R, b, fi);
        c = exact_div(R, d, fi);
        d = sub(R, c, derivative(R, b));
        ++i;
      }
    }
  }
  // Exact content: input / prod(factor^mult) must be a ring element.
  Coeffs<Ops> prod{R.one()};
  for (const auto& [f, m] : out.factors) {
    for (int k = 0; k < m; ++k) prod = mul(R, prod, f);
  }
  auto q = exact_div(R, input, prod);
  if (q.size() != 1) throw InternalFault("dense: square-free content not a ring element");
  out.content = q[0];
  return out;
}

}  // namespace paramspec::dense

#endif
