#include "paramspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "paramspec/elimination.hpp"
#include "paramspec/version.hpp"

namespace paramspec {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string rational_array(const std::vector<Rational>& coeffs) {
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) out += ", ";
    out += quoted(coeffs[k].to_string());
  }
  return out + "]";
}

// Structured polynomial payloads: coefficient lists are lowest power first,
// matching the document format.
std::string unipoly_json(const UniPoly& p, const std::string& var, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::ostringstream os;
  os << "{\n";
  os << pad << "  \"text\": " << quoted(p.to_string()) << ",\n";
  os << pad << "  \"variable\": " << quoted(var) << ",\n";
  os << pad << "  \"coefficients\": " << rational_array(p.coeffs()) << "\n";
  os << pad << "}";
  return os.str();
}

std::string bipoly_json(const BiPoly& p, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::ostringstream os;
  os << "{\n";
  os << pad << "  \"text\": " << quoted(p.to_string()) << ",\n";
  os << pad << "  \"variable\": " << quoted(p.outer_var()) << ",\n";
  os << pad << "  \"parameter\": " << quoted(p.inner_var()) << ",\n";
  os << pad << "  \"coefficients\": [";
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k > 0) os << ", ";
    os << rational_array(p.coeffs()[k].coeffs());
  }
  os << "]\n" << pad << "}";
  return os.str();
}

std::string real_root_json(const RealRoot& root, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::ostringstream os;
  os << "{\n";
  os << pad << "  \"value\": " << format_double(root.value) << ",\n";
  os << pad << "  \"interval\": [" << quoted(root.lower.to_string()) << ", "
     << quoted(root.upper.to_string()) << "],\n";
  os << pad << "  \"exact\": " << (root.exact ? "true" : "false") << ",\n";
  os << pad << "  \"multiplicity\": " << root.multiplicity << "\n";
  os << pad << "}";
  return os.str();
}

std::string degeneracy_json(const DegeneracyProfile& profile, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::ostringstream os;
  os << "{\n";
  os << pad << "  \"persistent\": " << (profile.persistent_degeneracy ? "true" : "false")
     << ",\n";
  os << pad << "  \"branches\": [";
  for (std::size_t k = 0; k < profile.branches.size(); ++k) {
    const auto& branch = profile.branches[k];
    os << (k == 0 ? "\n" : ",\n");
    os << pad << "    {\"factor\": " << quoted(branch.factor.to_string())
       << ", \"multiplicity\": " << branch.multiplicity
       << ", \"e_degree\": " << branch.e_degree << "}";
  }
  os << (profile.branches.empty() ? "]" : "\n" + pad + "  ]") << "\n";
  os << pad << "}";
  return os.str();
}

std::string crossings_body(const CrossingReport& report, const std::string& parameter,
                           int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::ostringstream os;
  os << pad << "\"disc_before_reduction_zero\": "
     << (report.identically_zero_before_reduction ? "true" : "false") << ",\n";
  os << pad << "\"discriminant\": " << unipoly_json(report.discriminant, parameter, indent)
     << ",\n";
  os << pad << "\"crossings\": [";
  for (std::size_t k = 0; k < report.crossings.size(); ++k) {
    const auto& crossing = report.crossings[k];
    os << (k == 0 ? "\n" : ",\n");
    os << pad << "  {\n";
    os << pad << "    \"lambda\": " << real_root_json(crossing.location, indent + 4) << ",\n";
    os << pad << "    \"meets\": [";
    for (std::size_t m = 0; m < crossing.meets.size(); ++m) {
      const auto& meet = crossing.meets[m];
      os << (m == 0 ? "\n" : ",\n");
      os << pad << "      {\"value\": " << format_double(meet.value) << ", \"levels\": [";
      for (std::size_t t = 0; t < meet.indices.size(); ++t) {
        if (t > 0) os << ", ";
        os << meet.indices[t] + 1;  // 1-based level labels, matching E1..En
      }
      os << "]}";
    }
    os << (crossing.meets.empty() ? "]" : "\n" + pad + "    ]") << "\n";
    os << pad << "  }";
  }
  os << (report.crossings.empty() ? "]" : "\n" + pad + "]") << ",\n";
  os << pad << "\"unconfirmed_discriminant_roots\": [";
  for (std::size_t k = 0; k < report.unconfirmed.size(); ++k) {
    os << (k == 0 ? "\n" + pad + "  " : ",\n" + pad + "  ")
       << real_root_json(report.unconfirmed[k], indent + 2);
  }
  os << (report.unconfirmed.empty() ? "]" : "\n" + pad + "]") << ",\n";
  os << pad << "\"exceptional_points\": [";
  for (std::size_t k = 0; k < report.exceptional_points.size(); ++k) {
    const auto& ep = report.exceptional_points[k];
    os << (k == 0 ? "\n" : ",\n");
    os << pad << "  {\"re\": " << format_double(ep.value.real())
       << ", \"im\": " << format_double(ep.value.imag())
       << ", \"modulus\": " << format_double(ep.modulus())
       << ", \"residual\": " << format_double(ep.residual) << "}";
  }
  os << (report.exceptional_points.empty() ? "]" : "\n" + pad + "]") << ",\n";
  os << pad << "\"convergence_radius\": "
     << (report.convergence_radius ? format_double(*report.convergence_radius) : "null")
     << ",\n";
  os << pad << "\"degeneracy\": " << degeneracy_json(report.degeneracy, indent);
  return os.str();
}

std::string symmetry_body(const SymmetryReport& report, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::ostringstream os;
  os << pad << "\"order\": " << report.group.order() << ",\n";
  os << pad << "\"abelian\": " << (report.group.abelian ? "true" : "false") << ",\n";
  os << pad << "\"degeneracy_expected\": " << (report.degeneracy_expected ? "true" : "false")
     << ",\n";
  os << pad << "\"degeneracy_observed\": " << (report.degeneracy_observed ? "true" : "false")
     << ",\n";
  os << pad << "\"consistent\": " << (report.consistent ? "true" : "false") << ",\n";
  os << pad << "\"note\": " << quoted(report.note) << ",\n";
  os << pad << "\"elements\": [";
  for (std::size_t k = 0; k < report.group.elements.size(); ++k) {
    if (k > 0) os << ", ";
    os << quoted(report.group.elements[k].to_string());
  }
  os << "]";
  return os.str();
}

std::string header_body(const AnalysisReport& report) {
  std::ostringstream os;
  os << "  \"schema_version\": " << kReportSchemaVersion << ",\n";
  os << "  \"tool\": {\"name\": " << quoted(kToolName) << ", \"version\": "
     << quoted(kToolVersion) << "},\n";
  os << "  \"input\": {\"digest\": " << quoted(report.digest)
     << ", \"n\": " << report.document.n << ", \"parameter\": "
     << quoted(report.document.parameter) << "}";
  return os.str();
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

AnalysisReport analyze(const MatrixDocument& document, const ClassifyOptions& classify_options,
                       const SymmetryOptions& symmetry_options) {
  AnalysisReport out;
  out.document = document;
  out.digest = document_digest(document);
  const ParametricMatrix h = to_matrix(document);
  out.characteristic = h.char_poly();
  out.reduced = h.reduced_char_poly();
  out.crossings = classify_crossings(h, classify_options);
  out.symmetry = symmetry_report(h, symmetry_options);
  return out;
}

std::string render_report_json(const AnalysisReport& report) {
  std::ostringstream os;
  os << "{\n";
  os << header_body(report) << ",\n";
  os << "  \"char_poly\": " << bipoly_json(report.characteristic, 2) << ",\n";
  os << "  \"reduced_poly\": " << bipoly_json(report.reduced, 2) << ",\n";
  os << crossings_body(report.crossings, report.document.parameter, 2) << ",\n";
  os << "  \"symmetry\": {\n" << symmetry_body(report.symmetry, 4) << "\n  }\n";
  os << "}\n";
  return os.str();
}

std::string render_charpoly_json(const AnalysisReport& report) {
  std::ostringstream os;
  os << "{\n";
  os << header_body(report) << ",\n";
  os << "  \"char_poly\": " << bipoly_json(report.characteristic, 2) << "\n";
  os << "}\n";
  return os.str();
}

std::string render_disc_json(const AnalysisReport& report) {
  std::ostringstream os;
  os << "{\n";
  os << header_body(report) << ",\n";
  os << "  \"disc_before_reduction_zero\": "
     << (report.crossings.identically_zero_before_reduction ? "true" : "false") << ",\n";
  os << "  \"reduced_poly\": " << bipoly_json(report.reduced, 2) << ",\n";
  os << "  \"discriminant\": "
     << unipoly_json(report.crossings.discriminant, report.document.parameter, 2) << "\n";
  os << "}\n";
  return os.str();
}

std::string render_crossings_json(const AnalysisReport& report) {
  std::ostringstream os;
  os << "{\n";
  os << header_body(report) << ",\n";
  os << crossings_body(report.crossings, report.document.parameter, 2) << "\n";
  os << "}\n";
  return os.str();
}

std::string render_symmetry_json(const AnalysisReport& report) {
  std::ostringstream os;
  os << "{\n";
  os << header_body(report) << ",\n";
  os << "  \"symmetry\": {\n" << symmetry_body(report.symmetry, 4) << "\n  }\n";
  os << "}\n";
  return os.str();
}

std::string render_report_text(const AnalysisReport& report) {
  std::ostringstream os;
  const auto& crossings = report.crossings;
  os << kToolName << " " << kToolVersion << " analysis (" << report.digest << ")\n";
  os << "matrix: n=" << report.document.n << ", parameter=" << report.document.parameter
     << "\n\n";
  os << "char poly p(E," << report.document.parameter << ") = "
     << report.characteristic.to_string() << "\n";
  os << "Disc_E(p) identically zero: "
     << (crossings.identically_zero_before_reduction ? "yes" : "no") << "\n";
  os << "reduced q(E," << report.document.parameter << ") = " << report.reduced.to_string()
     << "\n";
  os << "Disc_E(q) = " << crossings.discriminant.to_string() << "\n\n";
  os << "crossings:\n";
  if (crossings.crossings.empty()) os << "  none\n";
  for (const auto& crossing : crossings.crossings) {
    os << "  " << report.document.parameter << " = " << format_double(crossing.location.value)
       << " (multiplicity " << crossing.location.multiplicity << ")";
    for (const auto& meet : crossing.meets) {
      os << "  [levels";
      for (const int idx : meet.indices) os << " E" << idx + 1;
      os << " meet at " << format_double(meet.value) << "]";
    }
    os << "\n";
  }
  if (!crossings.unconfirmed.empty()) {
    os << "unconfirmed discriminant roots:\n";
    for (const auto& root : crossings.unconfirmed) {
      os << "  " << report.document.parameter << " = " << format_double(root.value) << "\n";
    }
  }
  os << "exceptional points:\n";
  if (crossings.exceptional_points.empty()) os << "  none\n";
  for (const auto& ep : crossings.exceptional_points) {
    os << "  " << format_double(ep.value.real()) << (ep.value.imag() < 0 ? " - " : " + ")
       << format_double(std::abs(ep.value.imag())) << "i  (modulus "
       << format_double(ep.modulus()) << ")\n";
  }
  if (crossings.convergence_radius) {
    os << "convergence radius: " << format_double(*crossings.convergence_radius) << "\n";
  }
  os << "\ndegeneracy profile: "
     << (crossings.degeneracy.persistent_degeneracy ? "persistent" : "none") << "\n";
  for (const auto& branch : crossings.degeneracy.branches) {
    os << "  factor " << branch.factor.to_string() << "  multiplicity " << branch.multiplicity
       << "  E-degree " << branch.e_degree << "\n";
  }
  os << "\nsymmetry: order " << report.symmetry.group.order() << ", "
     << (report.symmetry.group.abelian ? "abelian" : "nonabelian") << "\n";
  os << "  degeneracy expected: " << (report.symmetry.degeneracy_expected ? "yes" : "no")
     << ", observed: " << (report.symmetry.degeneracy_observed ? "yes" : "no") << "\n";
  os << "  " << report.symmetry.note << "\n";
  return os.str();
}

std::string render_sweep_csv(const SweepTable& table, const std::string& parameter) {
  std::ostringstream os;
  os << parameter;
  const std::size_t n = table.eigenvalue_rows.empty() ? 0 : table.eigenvalue_rows[0].size();
  for (std::size_t k = 1; k <= n; ++k) os << ",E" << k;
  os << "\n";
  for (std::size_t row = 0; row < table.parameter_values.size(); ++row) {
    os << format_double(table.parameter_values[row]);
    for (const double value : table.eigenvalue_rows[row]) os << "," << format_double(value);
    os << "\n";
  }
  return os.str();
}

std::string render_sweep_json(const SweepTable& table, const std::string& parameter) {
  std::ostringstream os;
  os << "{\n  \"parameter\": " << quoted(parameter) << ",\n  \"grid\": [";
  for (std::size_t k = 0; k < table.parameter_values.size(); ++k) {
    if (k > 0) os << ", ";
    os << format_double(table.parameter_values[k]);
  }
  os << "],\n  \"eigenvalues\": [";
  for (std::size_t row = 0; row < table.eigenvalue_rows.size(); ++row) {
    os << (row == 0 ? "\n" : ",\n") << "    [";
    for (std::size_t k = 0; k < table.eigenvalue_rows[row].size(); ++k) {
      if (k > 0) os << ", ";
      os << format_double(table.eigenvalue_rows[row][k]);
    }
    os << "]";
  }
  os << (table.eigenvalue_rows.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

}  // namespace paramspec
