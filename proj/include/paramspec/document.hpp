#ifndef PARAMSPEC_DOCUMENT_HPP
#define PARAMSPEC_DOCUMENT_HPP

#include <string>
#include <vector>

#include "paramspec/parametric_matrix.hpp"
#include "paramspec/rational.hpp"

namespace paramspec {

/// One matrix entry as it appears in an input document: 1-based indices,
/// coefficients lowest power first.
struct DocumentEntry {
  int i = 0;
  int j = 0;
  std::vector<Rational> coeffs;
};

/// The JSON-backed matrix description. Parsing normalizes to canonical form:
/// upper-triangle entries sorted by (i, j), coefficient lists trimmed,
/// all-zero entries dropped; serialize emits exactly that form, so
/// parse -> serialize -> parse is the identity.
struct MatrixDocument {
  int n = 0;
  std::string parameter = "lambda";
  std::vector<DocumentEntry> entries;

  friend bool operator==(const MatrixDocument& a, const MatrixDocument& b);
};

/// Strict parser: UTF-8 JSON object {"n", "parameter"?, "entries"}. Every
/// entry is {"i", "j", "coeffs"} with coeffs a list of integers or rational
/// strings "p/q". Duplicate (i,j) pairs, conflicting mirror values,
/// out-of-range indices and malformed rationals are ValidationErrors with
/// coordinates in the message.
MatrixDocument parse_document(const std::string& bytes);

/// Canonical serialization (two-space indent, LF line ends, sorted entries,
/// rationals as strings).
std::string serialize_document(const MatrixDocument& document);

ParametricMatrix to_matrix(const MatrixDocument& document);

/// Built-in fixtures; "benzene-huckel" is the alternating-bond hexagon
/// family. ValidationError for unknown names.
MatrixDocument builtin_document(const std::string& name);
std::vector<std::string> builtin_names();

/// FNV-1a 64-bit digest of the canonical serialization, e.g.
/// "fnv1a64:a1b2...". Stable across runs and platforms.
std::string document_digest(const MatrixDocument& document);

}  // namespace paramspec

#endif
