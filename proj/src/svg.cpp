#include "paramspec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "paramspec/errors.hpp"

namespace paramspec {

namespace {

constexpr double kWidth = 840.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 62.0;
constexpr double kRight = 18.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 46.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
                          "#8c564b", "#e377c2"};

std::string fixed2(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

// Tick spacing: 1, 2, or 5 times a power of ten, aiming for <= 9 ticks.
double tick_step(double span) {
  double step = std::pow(10.0, std::floor(std::log10(span / 2.0)));
  while (span / step > 9.0) {
    const double mantissa = step / std::pow(10.0, std::floor(std::log10(step)));
    if (mantissa < 1.5) {
      step *= 2.0;
    } else if (mantissa < 3.0) {
      step *= 2.5;
    } else {
      step *= 2.0;
    }
  }
  return step;
}

std::string trimmed_label(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", v);
  return buffer;
}

}  // namespace

std::string emit_svg(const SweepTable& table, const std::string& parameter) {
  if (table.parameter_values.empty() || table.eigenvalue_rows.empty()) {
    throw DomainError("emit_svg: empty sweep table");
  }
  const std::size_t curves = table.eigenvalue_rows[0].size();
  const double x_min = table.parameter_values.front();
  const double x_max = table.parameter_values.back();
  double y_min = table.eigenvalue_rows[0][0];
  double y_max = y_min;
  for (const auto& row : table.eigenvalue_rows) {
    for (const double v : row) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  const double y_pad = std::max(0.5, 0.05 * (y_max - y_min));
  y_min -= y_pad;
  y_max += y_pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  const auto sy = [&](double y) { return kTop + (y_max - y) / (y_max - y_min) * plot_h; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
     << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";

  // Axes with tick marks and numeric labels.
  os << "  <g stroke=\"#333333\" stroke-width=\"1\" font-family=\"sans-serif\" "
        "font-size=\"12\" fill=\"#333333\">\n";
  os << "    <line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(kTop + plot_h) << "\" x2=\""
     << fixed2(kLeft + plot_w) << "\" y2=\"" << fixed2(kTop + plot_h) << "\"/>\n";
  os << "    <line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(kTop) << "\" x2=\""
     << fixed2(kLeft) << "\" y2=\"" << fixed2(kTop + plot_h) << "\"/>\n";

  const double x_step = tick_step(x_max - x_min);
  for (double tick = std::ceil(x_min / x_step) * x_step; tick <= x_max + 1e-12;
       tick += x_step) {
    const double px = sx(tick);
    os << "    <line x1=\"" << fixed2(px) << "\" y1=\"" << fixed2(kTop + plot_h) << "\" x2=\""
       << fixed2(px) << "\" y2=\"" << fixed2(kTop + plot_h + 5) << "\"/>\n";
    os << "    <text x=\"" << fixed2(px) << "\" y=\"" << fixed2(kTop + plot_h + 19)
       << "\" text-anchor=\"middle\" stroke=\"none\">" << trimmed_label(tick) << "</text>\n";
  }
  const double y_step = tick_step(y_max - y_min);
  for (double tick = std::ceil(y_min / y_step) * y_step; tick <= y_max + 1e-12;
       tick += y_step) {
    const double py = sy(tick);
    os << "    <line x1=\"" << fixed2(kLeft - 5) << "\" y1=\"" << fixed2(py) << "\" x2=\""
       << fixed2(kLeft) << "\" y2=\"" << fixed2(py) << "\"/>\n";
    os << "    <text x=\"" << fixed2(kLeft - 9) << "\" y=\"" << fixed2(py + 4)
       << "\" text-anchor=\"end\" stroke=\"none\">" << trimmed_label(tick) << "</text>\n";
  }
  os << "    <text x=\"" << fixed2(kLeft + plot_w / 2) << "\" y=\"" << fixed2(kHeight - 8)
     << "\" text-anchor=\"middle\" stroke=\"none\">" << parameter << "</text>\n";
  os << "    <text x=\"16\" y=\"" << fixed2(kTop + plot_h / 2)
     << "\" text-anchor=\"middle\" stroke=\"none\" transform=\"rotate(-90 16 "
     << fixed2(kTop + plot_h / 2) << ")\">E</text>\n";
  os << "  </g>\n";

  // One polyline per eigenvalue index, ascending order within each row.
  for (std::size_t curve = 0; curve < curves; ++curve) {
    os << "  <polyline class=\"eigenvalue\" data-level=\"E" << curve + 1 << "\" fill=\"none\" "
       << "stroke=\"" << kPalette[curve % (sizeof kPalette / sizeof kPalette[0])]
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t row = 0; row < table.parameter_values.size(); ++row) {
      if (row > 0) os << ' ';
      os << fixed2(sx(table.parameter_values[row])) << ','
         << fixed2(sy(table.eigenvalue_rows[row][curve]));
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace paramspec
