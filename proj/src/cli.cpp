#include "paramspec/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "paramspec/elimination.hpp"
#include "paramspec/errors.hpp"
#include "paramspec/report.hpp"
#include "paramspec/svg.hpp"
#include "paramspec/version.hpp"

namespace paramspec {

namespace {

struct CommonOptions {
  std::string input;
  std::string builtin;
  std::string output;
  std::string format;
  double lambda_tol = 1e-12;
  double gap_tol = 1e-8;
  std::string range = "-2:2";
  int steps = 401;
  bool signed_symmetries = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--input", opts.input, "matrix document (JSON file)");
  cmd->add_option("--builtin", opts.builtin, "built-in fixture name (benzene-huckel)");
  cmd->add_option("--output", opts.output, "write data here instead of standard output");
  cmd->add_option("--format", opts.format, "output format: json|csv|text");
  cmd->add_option("--lambda-tol", opts.lambda_tol, "parameter-root refinement tolerance");
  cmd->add_option("--gap-tol", opts.gap_tol, "eigenvalue meeting tolerance");
  cmd->add_option("--range", opts.range, "sweep range a:b");
  cmd->add_option("--steps", opts.steps, "sweep grid points");
  cmd->add_flag("--signed-symmetries", opts.signed_symmetries,
                "search signed permutations, not just plain ones");
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MatrixDocument load_document(const CommonOptions& opts) {
  if (opts.input.empty() == opts.builtin.empty()) {
    throw UsageError("exactly one of --input or --builtin is required");
  }
  if (!opts.builtin.empty()) return builtin_document(opts.builtin);
  std::ifstream file(opts.input, std::ios::binary);
  if (!file) throw ValidationError("cannot open input file \"" + opts.input + "\"");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_document(buffer.str());
}

void write_output(const std::string& data, const CommonOptions& opts) {
  if (opts.output.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file \"" + opts.output + "\"");
  file << data;
}

std::string pick_format(const CommonOptions& opts, const std::string& fallback,
                        const std::vector<std::string>& allowed) {
  const std::string format = opts.format.empty() ? fallback : opts.format;
  for (const auto& candidate : allowed) {
    if (format == candidate) return format;
  }
  throw UsageError("format \"" + format + "\" not supported by this subcommand");
}

ClassifyOptions classify_options(const CommonOptions& opts) {
  ClassifyOptions out;
  if (opts.lambda_tol <= 0.0) throw UsageError("--lambda-tol must be positive");
  if (opts.gap_tol <= 0.0) throw UsageError("--gap-tol must be positive");
  out.lambda_tol = Rational::from_double(opts.lambda_tol);
  out.gap_tol = opts.gap_tol;
  return out;
}

SymmetryOptions symmetry_options(const CommonOptions& opts) {
  SymmetryOptions out;
  out.signed_search = opts.signed_symmetries;
  return out;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range expects the form a:b");
  try {
    std::size_t used = 0;
    const double lo = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw UsageError("--range expects numbers a:b");
    const std::string rest = text.substr(colon + 1);
    const double hi = std::stod(rest, &used);
    if (used != rest.size()) throw UsageError("--range expects numbers a:b");
    if (!(lo < hi)) throw UsageError("--range requires a < b");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw UsageError("--range expects numbers a:b");
  } catch (const std::out_of_range&) {
    throw UsageError("--range values out of range");
  }
}

AnalysisReport partial_report(const MatrixDocument& doc) {
  AnalysisReport report;
  report.document = doc;
  report.digest = document_digest(doc);
  return report;
}

int dispatch(const std::string& command, const CommonOptions& opts) {
  const MatrixDocument doc = load_document(opts);

  if (command == "charpoly") {
    const std::string format = pick_format(opts, "text", {"json", "text"});
    AnalysisReport report = partial_report(doc);
    report.characteristic = to_matrix(doc).char_poly();
    write_output(format == "json" ? render_charpoly_json(report)
                                  : report.characteristic.to_string() + "\n",
                 opts);
    return 0;
  }

  if (command == "disc") {
    const std::string format = pick_format(opts, "text", {"json", "text"});
    AnalysisReport report = partial_report(doc);
    report.characteristic = to_matrix(doc).char_poly();
    report.reduced = report.characteristic.square_free_part();
    report.crossings.identically_zero_before_reduction =
        discriminant(report.characteristic).is_zero();
    report.crossings.discriminant = discriminant(report.reduced);
    if (format == "json") {
      write_output(render_disc_json(report), opts);
    } else {
      std::ostringstream os;
      os << "Disc_E(p) identically zero: "
         << (report.crossings.identically_zero_before_reduction ? "yes" : "no") << "\n";
      os << "q(E," << doc.parameter << ") = " << report.reduced.to_string() << "\n";
      os << "Disc_E(q) = " << report.crossings.discriminant.to_string() << "\n";
      write_output(os.str(), opts);
    }
    return 0;
  }

  if (command == "crossings") {
    const std::string format = pick_format(opts, "json", {"json", "text"});
    AnalysisReport report = partial_report(doc);
    report.crossings = classify_crossings(to_matrix(doc), classify_options(opts));
    if (format == "json") {
      write_output(render_crossings_json(report), opts);
    } else {
      std::ostringstream os;
      os << "Disc_E(p) identically zero: "
         << (report.crossings.identically_zero_before_reduction ? "yes" : "no") << "\n";
      os << "crossings:\n";
      if (report.crossings.crossings.empty()) os << "  none\n";
      for (const auto& crossing : report.crossings.crossings) {
        os << "  " << doc.parameter << " = " << format_double(crossing.location.value)
           << " (multiplicity " << crossing.location.multiplicity << ")";
        for (const auto& meet : crossing.meets) {
          os << "  [levels";
          for (const int idx : meet.indices) os << " E" << idx + 1;
          os << " meet at " << format_double(meet.value) << "]";
        }
        os << "\n";
      }
      for (const auto& root : report.crossings.unconfirmed) {
        os << "  unconfirmed discriminant root at " << format_double(root.value) << "\n";
      }
      os << "exceptional points:\n";
      if (report.crossings.exceptional_points.empty()) os << "  none\n";
      for (const auto& ep : report.crossings.exceptional_points) {
        os << "  " << format_double(ep.value.real()) << (ep.value.imag() < 0 ? " - " : " + ")
           << format_double(std::abs(ep.value.imag())) << "i  (modulus "
           << format_double(ep.modulus()) << ")\n";
      }
      if (report.crossings.convergence_radius) {
        os << "convergence radius: " << format_double(*report.crossings.convergence_radius)
           << "\n";
      }
      write_output(os.str(), opts);
    }
    return 0;
  }

  if (command == "symmetry") {
    const std::string format = pick_format(opts, "json", {"json", "text"});
    AnalysisReport report = partial_report(doc);
    report.symmetry = symmetry_report(to_matrix(doc), symmetry_options(opts));
    if (format == "json") {
      write_output(render_symmetry_json(report), opts);
    } else {
      std::ostringstream os;
      os << "symmetry group order " << report.symmetry.group.order() << " ("
         << (report.symmetry.group.abelian ? "abelian" : "nonabelian") << ")\n";
      for (const auto& element : report.symmetry.group.elements) {
        os << "  " << element.to_string() << "\n";
      }
      os << "degeneracy expected: " << (report.symmetry.degeneracy_expected ? "yes" : "no")
         << ", observed: " << (report.symmetry.degeneracy_observed ? "yes" : "no") << "\n";
      os << report.symmetry.note << "\n";
      write_output(os.str(), opts);
    }
    return 0;
  }

  if (command == "sweep" || command == "plot") {
    if (opts.steps < 2) throw UsageError("--steps must be >= 2");
    const auto [lo, hi] = parse_range(opts.range);
    const SweepTable table = sweep(to_matrix(doc), lo, hi, opts.steps);
    if (command == "plot") {
      write_output(emit_svg(table, doc.parameter), opts);
      return 0;
    }
    const std::string format = pick_format(opts, "csv", {"csv", "json", "text"});
    if (format == "json") {
      write_output(render_sweep_json(table, doc.parameter), opts);
    } else {
      write_output(render_sweep_csv(table, doc.parameter), opts);
    }
    return 0;
  }

  if (command == "report") {
    const std::string format = pick_format(opts, "json", {"json", "text"});
    const AnalysisReport report =
        analyze(doc, classify_options(opts), symmetry_options(opts));
    write_output(format == "json" ? render_report_json(report) : render_report_text(report),
                 opts);
    return 0;
  }

  throw UsageError("unknown subcommand \"" + command + "\"");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"exact crossing/avoided-crossing analysis for parameter-dependent "
               "symmetric matrices"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(0, 1);

  CommonOptions opts;
  const std::vector<std::string> commands = {"charpoly", "disc",  "crossings", "symmetry",
                                             "sweep",    "plot",  "report"};
  const std::vector<std::string> descriptions = {
      "exact characteristic polynomial",
      "discriminants before and after square-free reduction",
      "level crossings, exceptional points, convergence radius",
      "commuting permutation group and the degeneracy cross-check",
      "eigenvalue sweep over a parameter range",
      "SVG plot of the eigenvalue sweep",
      "full analysis report",
  };
  for (std::size_t k = 0; k < commands.size(); ++k) {
    add_common_flags(app.add_subcommand(commands[k], descriptions[k]), opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help / --version land here with Success.
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n";
    return 1;
  }

  const auto chosen = app.get_subcommands();
  if (chosen.empty()) {
    std::cerr << "a subcommand is required; see --help\n";
    return 1;
  }

  try {
    return dispatch(chosen.front()->get_name(), opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back(kToolName);
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& arg : full) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace paramspec
