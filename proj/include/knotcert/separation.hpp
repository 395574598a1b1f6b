#pragma once

#include <optional>
#include <span>
#include <vector>

#include "knotcert/hull.hpp"

namespace knotcert {

struct SeparationResult {
    enum class Verdict { separated, shared_points_only, overlapping } verdict;
    Plane witness;                    // separated: A strictly positive, B strictly negative
                                      // shared_points_only: A >= 0, B <= 0, shared points on it
    std::vector<Point3> shared;       // shared_points_only: the common points
    std::optional<Point3> overlap_at; // overlapping: a point in both hulls
};

/// Exact disjointness decision for two convex hulls. Witness planes are drawn
/// from a separating-axis family (facet normals, edge-direction cross
/// products, coordinate axes, planes through allowed shared points); if no
/// candidate decides, an exact vertex enumeration of the intersection
/// polytope settles it and supplies an overlap witness.
SeparationResult separate(const ConvexHull3& a, const ConvexHull3& b, std::span<const Point3> allowed_shared);

struct PlanePolylineHits {
    int count = 0;
    std::vector<Point3> points;
};

/// Exact intersection points of an open polyline with a plane. Vertices on
/// the plane count once and must be transversal (or be the polyline's
/// endpoints); an edge lying inside the plane is a degenerate input.
PlanePolylineHits plane_polyline_intersections(const Plane& pi, std::span<const Point3> polyline);

/// Vertices of the polytope obtained by intersecting both hulls' halfspace
/// systems with optional extra constraints; empty result means empty
/// intersection. Used by separate() internally and by enclosure checks.
std::vector<Point3> intersection_vertices(std::span<const Plane> constraints);

} // namespace knotcert
