#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "knotcert/geometry.hpp"

namespace knotcert {

/// Degree-n Bézier control polygon: n+1 ordered points, consecutive points
/// distinct. A closed curve stores the duplicated endpoint (first == last),
/// as the input data does; PL-knot code strips the duplicate.
struct ControlPolygon {
    std::vector<Point3> points;
    bool closed = false;

    ControlPolygon() = default;
    explicit ControlPolygon(std::vector<Point3> pts);

    int degree() const { return static_cast<int>(points.size()) - 1; }
    const Point3& front() const { return points.front(); }
    const Point3& back() const { return points.back(); }
};

struct AxisSet {
    bool x = false, y = false, z = false;

    bool contains(Axis a) const { return a == Axis::X ? x : a == Axis::Y ? y : z; }
    bool empty() const { return !x && !y && !z; }
    std::string str() const; // "X,Z" style
    friend bool operator==(const AxisSet&, const AxisSet&) = default;
};

/// 2^level sub-control polygons from repeated midpoint de Casteljau splits,
/// in curve parameter order; consecutive pieces share one endpoint.
struct SubdivisionForest {
    int level = 0;
    std::vector<ControlPolygon> pieces;
    Rational scale{1}; // factor already applied to the input coordinates

    /// Closed PL knot through all sub-control points (pieces concatenated,
    /// shared endpoints and the closing duplicate dropped).
    std::vector<Point3> refinement_vertices() const;

    /// Closed PL knot through the 2^level subdivision points only
    /// (the shared piece endpoints; these lie on the curve).
    std::vector<Point3> subdivision_point_vertices() const;
};

/// Exact curve point by de Casteljau recursion; equals the Bernstein sum.
Point3 evaluate(const ControlPolygon& cp, const Rational& t);

/// Split at parameter t in (0,1): left gets the first column of the
/// de Casteljau triangle, right the last; left.back == right.front == C(t).
std::pair<ControlPolygon, ControlPolygon> decasteljau_split(const ControlPolygon& cp, const Rational& t);

/// level-fold midpoint subdivision.
SubdivisionForest subdivide_levels(const ControlPolygon& cp, int level);

struct ScaledPolygon {
    ControlPolygon polygon;
    int m = 0; // coordinates were multiplied by 2^m
};

/// Multiply integer coordinates by 2^m with m = level*(degree+1)+1, enough
/// for every coordinate through `level` midpoint subdivisions to stay integer.
ScaledPolygon scale_for_subdivision(const ControlPolygon& cp, int level);

/// Control polygon of the derivative: points n*(P_{i+1} - P_i).
ControlPolygon hodograph(const ControlPolygon& cp);

/// Axes along which the control points are strictly monotone.
AxisSet monotone_axes(const ControlPolygon& cp);

} // namespace knotcert
