#pragma once

#include <vector>

#include "knotcert/plknot.hpp"

namespace knotcert {

struct Crossing {
    Point2 at;                       // exact projected location
    int over_edge = -1, under_edge = -1;
    Rational over_param, under_param; // parameters along the 2D edges
    Rational over_depth, under_depth; // dropped-coordinate values; over > under
    int sign = 0;                     // +1 when (over dir, under dir) is counterclockwise
};

/// Regular projection of a PL knot with exact over/under data. The strand
/// with the larger dropped-coordinate value is the overcrossing.
struct KnotDiagram {
    Axis projection_axis;                 // dropped coordinate
    std::vector<Point2> projected_vertices;
    std::vector<Crossing> crossings;      // ordered along the curve (edge, param)

    int edge_count() const { return static_cast<int>(projected_vertices.size()); }
};

/// Thrown when the projection is irregular (vertex over another edge, triple
/// point, collinear consecutive projected edges, overlapping projections);
/// the caller may try another axis.
struct degenerate_projection : input_error {
    explicit degenerate_projection(const std::string& what) : input_error(what) {}
};

KnotDiagram project_diagram(const PLKnot& k, Axis drop);

} // namespace knotcert
