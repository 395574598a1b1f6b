#pragma once

#include <string>
#include <string_view>

#include "knotcert/bezier.hpp"

namespace knotcert {

/// Parse a polygon file. Two formats, auto-detected:
///   whitespace — one "x y z" per line, rationals as "p/q", '#' comments;
///   braces     — "{ x, y, z }," records, Mathematica "(* .. *)" comments
///                and header lines without braces are ignored.
ControlPolygon parse_polygon(std::string_view text);

std::string serialize_polygon_ws(const ControlPolygon& cp);
std::string serialize_polygon_braces(const ControlPolygon& cp);

/// Brace-record table of a subdivision forest: one "(*Subdivision L *)"
/// header, then each piece as brace rows (last row of a piece without the
/// trailing comma), pieces separated by blank lines.
std::string forest_table(const SubdivisionForest& forest);

/// The forest's refinement as a closed polygon file (whitespace format).
std::string forest_flat_polygon(const SubdivisionForest& forest);

} // namespace knotcert
