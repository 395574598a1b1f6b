#pragma once

#include "knotcert/certify.hpp"

namespace knotcert {

/// One-vertex linear perturbation family: the named vertex moves from start
/// to end as s runs over [0,1], every other vertex fixed.
struct VertexHomotopy {
    ControlPolygon base; // vertex at `start`
    int vertex = 0;
    Point3 start, end;

    VertexHomotopy(ControlPolygon base_polygon, int vertex_index, Point3 end_position);
};

ControlPolygon polygon_at(const VertexHomotopy& h, const Rational& s);

struct TransitionInterval {
    Rational lo, hi;
    KnotClass class_lo, class_hi;
    IsotopyCertificate cert_lo, cert_hi;
    bool uncertified_gap = false; // a midpoint inside failed certification at max_level
    int midpoints_tried = 0;
};

/// Bisection on s maintaining certified, distinct endpoint knot classes.
/// Midpoints are exact dyadic rationals; a midpoint whose curve cannot be
/// certified at max_level stops the search (uncertified_gap = true) rather
/// than guessing.
TransitionInterval bisect_transition(const VertexHomotopy& h, const Rational& tol, int max_level);

} // namespace knotcert
