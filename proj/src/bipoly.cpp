#include "paramspec/bipoly.hpp"

#include <sstream>

#include "paramspec/dense_poly.hpp"
#include "paramspec/errors.hpp"

namespace paramspec {

namespace {

const UniPoly kZeroUni;

std::string merge_inner(const BiPoly& a, const BiPoly& b) {
  auto inner_constant = [](const BiPoly& p) {
    for (const auto& c : p.coeffs()) {
      if (!c.is_constant()) return false;
    }
    return true;
  };
  return merge_vars(a.inner_var(), inner_constant(a), b.inner_var(), inner_constant(b));
}

}  // namespace

UniPoly UniPolyOps::content_gcd(const Elem& a, const Elem& b) const {
  auto positive = [](const Elem& p) { return p.leading().sign() < 0 ? -p : p; };
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  return UniPoly::gcd(a, b) * Rational::content_gcd(a.content(), b.content());
}

BiPoly::BiPoly(std::string outer_var, std::string inner_var, std::vector<UniPoly> coeffs)
    : outer_var_(std::move(outer_var)), inner_var_(std::move(inner_var)),
      coeffs_(std::move(coeffs)) {
  if (!outer_var_.empty() && outer_var_ == inner_var_) {
    throw DomainError("BiPoly: outer and inner variables must differ");
  }
  check_inner_tags();
  trim();
}

BiPoly BiPoly::zero(std::string outer_var, std::string inner_var) {
  return BiPoly(std::move(outer_var), std::move(inner_var), {});
}

BiPoly BiPoly::constant(std::string outer_var, std::string inner_var, UniPoly value) {
  return BiPoly(std::move(outer_var), std::move(inner_var), {std::move(value)});
}

BiPoly BiPoly::monomial(std::string outer_var, std::string inner_var, UniPoly coeff,
                        int outer_power) {
  if (outer_power < 0) throw DomainError("BiPoly: negative power");
  std::vector<UniPoly> c(static_cast<std::size_t>(outer_power) + 1);
  c.back() = std::move(coeff);
  return BiPoly(std::move(outer_var), std::move(inner_var), std::move(c));
}

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void BiPoly::check_inner_tags() const {
  for (const auto& c : coeffs_) {
    if (!c.is_constant() && c.var() != inner_var_) {
      throw DomainError("BiPoly: coefficient variable \"" + c.var() +
                        "\" does not match inner variable \"" + inner_var_ + "\"");
    }
  }
}

std::optional<int> BiPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

const UniPoly& BiPoly::coeff(int outer_power) const {
  if (outer_power < 0 || static_cast<std::size_t>(outer_power) >= coeffs_.size()) {
    return kZeroUni;
  }
  return coeffs_[static_cast<std::size_t>(outer_power)];
}

const UniPoly& BiPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("BiPoly: leading coefficient of zero polynomial");
  return coeffs_.back();
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  const UniPolyOps ops{merge_inner(a, b)};
  return BiPoly(merge_vars(a.outer_var_, a.is_constant_in_outer(), b.outer_var_,
                           b.is_constant_in_outer()),
                ops.var, dense::add(ops, a.coeffs_, b.coeffs_));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  const UniPolyOps ops{merge_inner(a, b)};
  return BiPoly(merge_vars(a.outer_var_, a.is_constant_in_outer(), b.outer_var_,
                           b.is_constant_in_outer()),
                ops.var, dense::sub(ops, a.coeffs_, b.coeffs_));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  const UniPolyOps ops{merge_inner(a, b)};
  return BiPoly(merge_vars(a.outer_var_, a.is_constant_in_outer(), b.outer_var_,
                           b.is_constant_in_outer()),
                ops.var, dense::mul(ops, a.coeffs_, b.coeffs_));
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  if (!a.is_constant_in_outer() && !b.is_constant_in_outer() && a.outer_var_ != b.outer_var_) {
    return false;
  }
  return a.coeffs_ == b.coeffs_;
}

BiPoly BiPoly::derivative(const std::string& wrt) const {
  if (wrt == outer_var_) return derivative_outer();
  if (wrt == inner_var_) {
    std::vector<UniPoly> out = coeffs_;
    for (auto& c : out) c = c.derivative();
    return BiPoly(outer_var_, inner_var_, std::move(out));
  }
  throw DomainError("BiPoly: derivative with respect to unknown variable \"" + wrt + "\"");
}

BiPoly BiPoly::derivative_outer() const {
  const UniPolyOps ops{inner_var_};
  return BiPoly(outer_var_, inner_var_, dense::derivative(ops, coeffs_));
}

UniPoly BiPoly::at_inner(const Rational& inner_value) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.eval(inner_value));
  return UniPoly(outer_var_, std::move(out));
}

Rational BiPoly::eval(const Rational& outer_value, const Rational& inner_value) const {
  return at_inner(inner_value).eval(outer_value);
}

BiPoly BiPoly::exact_div(const BiPoly& divisor) const {
  if (divisor.is_zero()) throw InternalFault("BiPoly: exact division by zero polynomial");
  const UniPolyOps ops{merge_inner(*this, divisor)};
  return BiPoly(merge_vars(outer_var_, is_constant_in_outer(), divisor.outer_var_,
                           divisor.is_constant_in_outer()),
                ops.var, dense::exact_div(ops, coeffs_, divisor.coeffs_));
}

std::pair<UniPoly, BiPoly> BiPoly::content_and_primitive() const {
  if (is_zero()) throw DomainError("BiPoly: content of zero polynomial");
  const UniPolyOps ops{inner_var_};
  auto [c, pp] = dense::signed_content_primitive(ops, coeffs_);
  return {c, BiPoly(outer_var_, inner_var_, std::move(pp))};
}

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("BiPoly: gcd(0, 0)");
  const UniPolyOps ops{merge_inner(a, b)};
  return BiPoly(merge_vars(a.outer_var_, a.is_constant_in_outer(), b.outer_var_,
                           b.is_constant_in_outer()),
                ops.var, dense::gcd(ops, a.coeffs_, b.coeffs_));
}

BiPoly BiPoly::square_free_part() const {
  if (is_zero()) throw DomainError("BiPoly: square-free part of zero polynomial");
  const UniPolyOps ops{inner_var_};
  return BiPoly(outer_var_, inner_var_, dense::square_free_part(ops, coeffs_));
}

SquareFreeDecomposition<BiPoly, UniPoly> BiPoly::square_free_decomposition() const {
  if (is_zero()) throw DomainError("BiPoly: square-free decomposition of zero polynomial");
  const UniPolyOps ops{inner_var_};
  auto raw = dense::square_free_decomposition(ops, coeffs_);
  SquareFreeDecomposition<BiPoly, UniPoly> out;
  out.content = raw.content;
  out.factors.reserve(raw.factors.size());
  for (auto& term : raw.factors) {
    out.factors.push_back(
        {BiPoly(outer_var_, inner_var_, std::move(term.factor)), term.multiplicity});
  }
  return out;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  const std::string name = outer_var_.empty() ? "E" : outer_var_;
  std::ostringstream os;
  bool first = true;
  for (int p = static_cast<int>(coeffs_.size()) - 1; p >= 0; --p) {
    const UniPoly& c = coeffs_[static_cast<std::size_t>(p)];
    if (c.is_zero()) continue;
    // The leading sign moves out front; multi-term coefficients are
    // parenthesized.
    std::size_t terms = 0;
    for (const auto& r : c.coeffs()) {
      if (!r.is_zero()) ++terms;
    }
    const bool single = terms == 1;
    const bool negative = c.leading().sign() < 0;
    const UniPoly shown = negative ? -c : c;
    const std::string body = single ? shown.to_string() : "(" + shown.to_string() + ")";
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (p == 0) {
      os << body;
    } else {
      if (!(single && body == "1")) os << body << '*';
      os << name;
      if (p > 1) os << '^' << p;
    }
  }
  return os.str();
}

}  // namespace paramspec
