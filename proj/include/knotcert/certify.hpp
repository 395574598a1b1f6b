#pragma once

#include <utility>

#include "knotcert/enclosure.hpp"
#include "knotcert/gauss.hpp"
#include "knotcert/jones.hpp"

namespace knotcert {

struct PieceCertificate {
    int index = 0;
    Axis monotone_axis = Axis::X; // one certified axis
    AxisSet axes;                 // all strictly monotone axes
    ConvexHull3 hull;
};

struct PairSeparation {
    int i = 0, j = 0;
    std::vector<Point3> allowed; // shared subdivision endpoints for this pair
    SeparationResult result;
};

struct EnclosureRepair {
    int piece = 0;                  // the piece whose hull was trimmed
    std::pair<int, int> offending;  // the hull pair that failed plain separation
    Enclosure enclosure;
    EnclosureEvidence evidence;
    std::vector<std::pair<int, EnclosureSeparation>> against; // vs every other piece
};

/// Machine-checkable evidence that the control polygon's Bézier curve is
/// ambient isotopic to the subdivided PL refinement: per-piece coordinate
/// monotonicity, pairwise hull separation (with shared subdivision endpoints
/// exempted), enclosure repairs where plain hulls overlap, simplicity of the
/// refinement, and its classified diagram.
struct IsotopyCertificate {
    int level = 0;
    std::vector<PieceCertificate> pieces;
    std::vector<PairSeparation> separations;
    std::vector<EnclosureRepair> enclosures;
    std::vector<Point3> refinement; // PL knot the class refers to
    Axis diagram_axis = Axis::Z;
    KnotDiagram diagram;
    KnotClass pl_knot_class;
};

struct CertifyOptions {
    bool enclosure_repair = true;
    // widen the repair's normal search from the canonical zero-component
    // normals to a small rational grid of in-plane rotations (slower; the
    // canonical normals suffice for curves whose overlap is as mild as the
    // worked data)
    bool normal_grid_search = false;
};

/// Certify at exactly the given subdivision level; throws
/// certification_failure carrying the obstruction when the level does not
/// certify (repairs are attempted first for overlapping hull pairs without
/// shared control points).
IsotopyCertificate certify_isotopy(const ControlPolygon& cp, int level, const CertifyOptions& opts = {});

/// Knot type of the Bézier curve: escalates certify_isotopy through
/// level = 1..max_level and returns the first certificate.
std::pair<KnotClass, IsotopyCertificate> bezier_knot_type(const ControlPolygon& cp, int max_level);

inline constexpr int kDefaultMaxLevel = 6;

struct PushCertificate {
    int vertex = 0;
    Point3 start, target;
    std::array<Point3, 3> tri_prev;  // (previous vertex, start, target)
    std::array<Point3, 3> tri_next;  // (next vertex, start, target)
    int edges_checked = 0;           // non-adjacent edges tested against both triangles
};

/// Certify a one-vertex linear move: both swept triangles must avoid every
/// edge not incident to the moved vertex (contact at the triangle's hinge
/// vertex is exempt for the edges meeting it), and the moved polygon must be
/// simple. Throws certification_failure with an exact witness otherwise.
PushCertificate certify_push(const ControlPolygon& cp, int vertex, const Point3& target);

/// Exact intersection of a (possibly degenerate) triangle with a segment.
struct TriSegHit {
    enum class Kind { empty, point, segment } kind = Kind::empty;
    Point3 a, b; // point: a; segment: endpoints a, b
};
TriSegHit triangle_segment_intersection(const Point3& t0, const Point3& t1, const Point3& t2,
                                        const Segment3& s);

} // namespace knotcert
