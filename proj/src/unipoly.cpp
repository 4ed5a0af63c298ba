#include "paramspec/unipoly.hpp"

#include <sstream>

#include "paramspec/dense_poly.hpp"
#include "paramspec/errors.hpp"

namespace paramspec {

namespace {
const RationalOps kOps;
const Rational kZero(0);
}  // namespace

Rational RationalOps::exact_div(const Elem& a, const Elem& b) const {
  if (b.is_zero()) throw InternalFault("Rational: exact division by zero");
  return a / b;
}

std::string merge_vars(const std::string& a_var, bool a_constant, const std::string& b_var,
                       bool b_constant) {
  if (a_var == b_var) return a_var;
  if (a_constant) return b_var;
  if (b_constant) return a_var;
  throw DomainError("variable-tag mismatch: \"" + a_var + "\" vs \"" + b_var + "\"");
}

UniPoly::UniPoly(std::string var, std::vector<Rational> coeffs_lowest_first)
    : var_(std::move(var)), coeffs_(std::move(coeffs_lowest_first)) {
  trim();
}

UniPoly UniPoly::zero(std::string var) { return UniPoly(std::move(var), {}); }

UniPoly UniPoly::constant(const Rational& value) { return UniPoly(std::string(), {value}); }

UniPoly UniPoly::monomial(std::string var, const Rational& coeff, int power) {
  if (power < 0) throw DomainError("UniPoly: negative power");
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1, 0);
  c.back() = coeff;
  return UniPoly(std::move(var), std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& UniPoly::coeff(int power) const {
  if (power < 0 || static_cast<std::size_t>(power) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<std::size_t>(power)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("UniPoly: leading coefficient of zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  return UniPoly(merge_vars(a.var_, a.is_constant(), b.var_, b.is_constant()),
                 dense::add(kOps, a.coeffs_, b.coeffs_));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  return UniPoly(merge_vars(a.var_, a.is_constant(), b.var_, b.is_constant()),
                 dense::sub(kOps, a.coeffs_, b.coeffs_));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  return UniPoly(merge_vars(a.var_, a.is_constant(), b.var_, b.is_constant()),
                 dense::mul(kOps, a.coeffs_, b.coeffs_));
}

UniPoly operator*(const UniPoly& a, const Rational& c) {
  return UniPoly(a.var_, dense::scale(kOps, a.coeffs_, c));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_) return false;
  return a.coeffs_ == b.coeffs_;
}

UniPoly UniPoly::derivative() const { return UniPoly(var_, dense::derivative(kOps, coeffs_)); }

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::complex<double> UniPoly::eval(const std::complex<double>& x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("UniPoly: division by zero polynomial");
  const std::string var =
      merge_vars(var_, is_constant(), divisor.var_, divisor.is_constant());
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot;
  if (coeffs_.size() >= divisor.coeffs_.size()) {
    quot.assign(coeffs_.size() - divisor.coeffs_.size() + 1, 0);
    while (rem.size() >= divisor.coeffs_.size() && !rem.empty()) {
      const std::size_t k = rem.size() - divisor.coeffs_.size();
      const Rational q = rem.back() / divisor.coeffs_.back();
      quot[k] = q;
      rem = dense::sub(kOps, rem, dense::scale_shift(kOps, divisor.coeffs_, q, static_cast<int>(k)));
    }
  }
  return {UniPoly(var, std::move(quot)), UniPoly(var, std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw InternalFault("UniPoly: inexact division");
  return q;
}

Rational UniPoly::content() const {
  if (is_zero()) throw DomainError("UniPoly: content of zero polynomial");
  return dense::content(kOps, coeffs_);
}

std::pair<Rational, UniPoly> UniPoly::content_and_primitive() const {
  if (is_zero()) throw DomainError("UniPoly: content of zero polynomial");
  auto [c, pp] = dense::signed_content_primitive(kOps, coeffs_);
  return {c, UniPoly(var_, std::move(pp))};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("UniPoly: gcd(0, 0)");
  const std::string var = merge_vars(a.var_, a.is_constant(), b.var_, b.is_constant());
  return UniPoly(var, dense::gcd(kOps, a.coeffs_, b.coeffs_));
}

UniPoly UniPoly::square_free_part() const {
  if (is_zero()) throw DomainError("UniPoly: square-free part of zero polynomial");
  return UniPoly(var_, dense::square_free_part(kOps, coeffs_));
}

SquareFreeDecomposition<UniPoly, Rational> UniPoly::square_free_decomposition() const {
  if (is_zero()) throw DomainError("UniPoly: square-free decomposition of zero polynomial");
  auto raw = dense::square_free_decomposition(kOps, coeffs_);
  SquareFreeDecomposition<UniPoly, Rational> out;
  out.content = raw.content;
  out.factors.reserve(raw.factors.size());
  for (auto& term : raw.factors) {
    out.factors.push_back({UniPoly(var_, std::move(term.factor)), term.multiplicity});
  }
  return out;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  const std::string name = var_.empty() ? "x" : var_;
  std::ostringstream os;
  bool first = true;
  for (int p = static_cast<int>(coeffs_.size()) - 1; p >= 0; --p) {
    const Rational& c = coeffs_[static_cast<std::size_t>(p)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1));
    if (p == 0) {
      os << mag.to_string();
    } else {
      if (!unit) os << mag.to_string() << '*';
      os << name;
      if (p > 1) os << '^' << p;
    }
  }
  return os.str();
}

}  // namespace paramspec
