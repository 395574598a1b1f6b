#pragma once

#include <optional>
#include <span>

#include "knotcert/bezier.hpp"
#include "knotcert/separation.hpp"

namespace knotcert {

/// The trimmed hull E = H ∩ (H_L ∪ H_R): the piece's convex hull cut down to
/// the union of two half-spaces whose boundary planes pass through the lines
/// (first point, midpoint) and (midpoint, last point).
struct Enclosure {
    ConvexHull3 hull;   // H, hull of the piece's control points
    Plane left_half;    // Π_L; kept side is eval >= 0
    Plane right_half;   // Π_R; kept side is eval >= 0
    Point3 mid;         // curve midpoint, on both planes
    bool normals_swapped = false; // supplied normals matched the opposite lines

    bool contains(const Point3& p) const {
        return hull.contains(p) && (left_half.side(p) >= 0 || right_half.side(p) >= 0);
    }
};

/// Construct the enclosure. Each normal must be exactly orthogonal to its
/// line's direction; if the two supplied normals fit the opposite lines they
/// are swapped and the swap recorded. Plane signs are chosen so every control
/// point lies in H_L ∪ H_R; if no sign choice achieves that, construction
/// fails.
Enclosure build_enclosure(const ControlPolygon& piece, const Point3& mid,
                          const Point3& normal_l, const Point3& normal_r);

/// Default normals for a piece: the primitive integer normal with
/// zero Z component (falling back to zero-Y, then zero-X) orthogonal to each
/// line. Returns {normal_l, normal_r}.
std::pair<Point3, Point3> default_enclosure_normals(const ControlPolygon& piece, const Point3& mid);

struct EnclosureSeparation {
    SeparationResult::Verdict verdict;
    SeparationResult left;  // H ∩ H_L  vs the other hull
    SeparationResult right; // H ∩ H_R  vs the other hull
    std::vector<Point3> shared;
};

/// Exact decision whether E ∩ other ⊆ allowed_shared, by testing the two
/// convex parts H∩H_L and H∩H_R against the other hull.
EnclosureSeparation enclosure_disjoint(const Enclosure& e, const ConvexHull3& other,
                                       std::span<const Point3> allowed_shared);

/// One convex part of the enclosure as a hull (H clipped by a half-space).
ConvexHull3 clip_hull(const ConvexHull3& hull, const Plane& keep_nonneg);

struct EnclosureEvidence {
    int plane_polyline_count_l = 0; // |Π_L ∩ control polyline|, must be 2
    int plane_polyline_count_r = 0;
    std::vector<std::pair<Rational, bool>> samples; // (t, C(t) ∈ E)
    bool control_points_inside = false;             // claim: K ⊆ E
};

/// Replays the containment argument for the curve piece: both planes meet the
/// control polyline exactly twice (variation diminishing then bounds the
/// curve), all control points lie in E, and each sampled curve point lies in
/// E. Throws on the first failing step.
EnclosureEvidence curve_in_enclosure(const ControlPolygon& piece, const Enclosure& e,
                                     std::span<const Rational> samples);

} // namespace knotcert
