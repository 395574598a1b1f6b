#pragma once

#include <span>
#include <vector>

#include "knotcert/geometry.hpp"

namespace knotcert {

enum class HullDim { point, collinear, planar, full3d };

struct Facet {
    Plane plane;           // outward: every hull point has side <= 0
    std::vector<int> ring; // vertex indices, counterclockwise from outside
};

/// Exact convex hull of a finite 3D point set. Lower-dimensional inputs are
/// first-class: a planar set keeps its polygon ring and supporting plane, a
/// collinear set its two extreme points.
struct ConvexHull3 {
    HullDim dim = HullDim::point;
    std::vector<Point3> vertices; // extreme points only
    std::vector<Facet> facets;    // full3d: all facets; planar: the one polygon

    bool contains(const Point3& p) const;
    std::vector<std::pair<int, int>> edges() const;

    /// Halfspace description: p inside  <=>  side(p) <= 0 for every plane.
    std::vector<Plane> constraints() const;
};

ConvexHull3 convex_hull(std::span<const Point3> points);

} // namespace knotcert
