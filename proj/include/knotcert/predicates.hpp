#pragma once

#include "knotcert/geometry.hpp"

namespace knotcert {

/// Sign of det(b-a, c-a): +1 counterclockwise, 0 collinear, -1 clockwise.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Exact sign of the plane equation at p.
int plane_side(const Plane& pi, const Point3& p);

/// True iff a, b, c lie on one line (cross product exactly zero).
bool collinear3(const Point3& a, const Point3& b, const Point3& c);

struct Seg2Hit {
    enum class Kind { empty, point, overlap } kind = Kind::empty;
    Point2 at;       // valid for point
    Rational alpha;  // parameter along the first segment
    Rational beta;   // parameter along the second segment
};

/// Exact intersection of two 2D segments. A unique common point (interior or
/// endpoint) is reported with its parameters; collinear segments sharing more
/// than a point report overlap.
Seg2Hit seg2_intersection(const Segment2& s, const Segment2& t);

struct Seg3Hit {
    enum class Kind { disjoint, touching, crossing, overlap } kind = Kind::disjoint;
    Point3 at; // single common point (touching/crossing) or a representative
               // interior point of a collinear overlap
};

/// Exact classification of two 3D segments: crossing when the unique common
/// point is interior to both, touching when it is an endpoint of at least
/// one, overlap for collinear intersections of positive length.
Seg3Hit seg3_intersection(const Segment3& s, const Segment3& t);

} // namespace knotcert
