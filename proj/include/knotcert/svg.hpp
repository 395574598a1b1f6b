#pragma once

#include <string>

#include "knotcert/diagram.hpp"

namespace knotcert {

/// Deterministic SVG of a knot diagram: the knot as polyline strands, the
/// under-strand broken around each crossing, crossings marked with dots.
/// Exact coordinates are converted to decimal only here (30 significant
/// digits).
std::string render_svg(const KnotDiagram& d);

/// Decimal expansion with the given number of significant digits.
std::string decimal_str(const Rational& r, int significant_digits);

} // namespace knotcert
