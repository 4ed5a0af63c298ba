#ifndef PARAMSPEC_SVG_HPP
#define PARAMSPEC_SVG_HPP

#include <string>

#include "paramspec/crossings.hpp"

namespace paramspec {

/// Self-contained SVG 1.1 rendering of an eigenvalue sweep: one polyline per
/// eigenvalue index, labeled axes with tick marks, fixed palette, fixed
/// two-decimal pixel coordinates. Byte-deterministic for a given table.
/// DomainError on an empty table.
std::string emit_svg(const SweepTable& table, const std::string& parameter);

}  // namespace paramspec

#endif
