#ifndef PARAMSPEC_ERRORS_HPP
#define PARAMSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace paramspec {

/// Operands outside an operation's domain (variable-tag mismatch, zero
/// polynomial where a nonzero one is required, asymmetric matrix, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (documents, rational strings).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative numeric routine failed to converge; carries the best
/// residuals seen so the caller can report them.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what, std::vector<double> residuals = {})
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

/// A request exceeds a configured search bound (e.g. exhaustive symmetry
/// search dimension, group closure size).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A condition theory rules out happened anyway (inexact division where
/// exactness is guaranteed). Always a bug, never user error.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace paramspec

#endif
