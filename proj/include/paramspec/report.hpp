#ifndef PARAMSPEC_REPORT_HPP
#define PARAMSPEC_REPORT_HPP

#include <string>

#include "paramspec/crossings.hpp"
#include "paramspec/document.hpp"
#include "paramspec/symmetry.hpp"

namespace paramspec {

/// Everything the `report` subcommand aggregates: exact polynomials, the
/// discriminant analysis, and the symmetry/degeneracy cross-check, plus the
/// provenance of the input document.
struct AnalysisReport {
  MatrixDocument document;
  std::string digest;
  BiPoly characteristic;
  BiPoly reduced;
  CrossingReport crossings;
  SymmetryReport symmetry;
};

AnalysisReport analyze(const MatrixDocument& document, const ClassifyOptions& classify_options,
                       const SymmetryOptions& symmetry_options);

/// Deterministic JSON: fixed key order, floats printed with 17 significant
/// digits, LF line ends. Byte-identical across runs for the same input.
std::string render_report_json(const AnalysisReport& report);
std::string render_report_text(const AnalysisReport& report);

/// Smaller per-subcommand payloads (same formatting rules).
std::string render_charpoly_json(const AnalysisReport& report);
std::string render_disc_json(const AnalysisReport& report);
std::string render_crossings_json(const AnalysisReport& report);
std::string render_symmetry_json(const AnalysisReport& report);

/// CSV: header "lambda,E1..En", 17-significant-digit floats, LF terminators.
std::string render_sweep_csv(const SweepTable& table, const std::string& parameter);
std::string render_sweep_json(const SweepTable& table, const std::string& parameter);

/// printf("%.17g") as a string; the one float formatter every emitter uses.
std::string format_double(double value);

}  // namespace paramspec

#endif
