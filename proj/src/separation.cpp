#include "knotcert/separation.hpp"

#include <algorithm>

#include "knotcert/errors.hpp"
#include "knotcert/predicates.hpp"

namespace knotcert {

namespace {

struct Projection {
    std::vector<Rational> dots;
    Rational lo, hi;

    Projection(std::span<const Point3> pts, const Point3& n) {
        dots.reserve(pts.size());
        for (const Point3& p : pts) dots.push_back(dot3(n, p));
        lo = hi = dots[0];
        for (const Rational& v : dots) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
    }
    std::vector<Point3> at(std::span<const Point3> pts, const Rational& value) const {
        std::vector<Point3> out;
        for (size_t i = 0; i < dots.size(); ++i)
            if (dots[i] == value) out.push_back(pts[i]);
        return out;
    }
};

bool subset_of(const std::vector<Point3>& pts, std::span<const Point3> allowed) {
    for (const Point3& p : pts)
        if (std::find(allowed.begin(), allowed.end(), p) == allowed.end()) return false;
    return true;
}

bool same_points(const std::vector<Point3>& a, const std::vector<Point3>& b) {
    if (a.size() != b.size()) return false;
    for (const Point3& p : a)
        if (std::find(b.begin(), b.end(), p) == b.end()) return false;
    return true;
}

void push_dir(std::vector<Point3>& dirs, const Point3& n) {
    if (!n.is_zero()) dirs.push_back(n);
}

std::vector<Point3> candidate_directions(const ConvexHull3& a, const ConvexHull3& b) {
    std::vector<Point3> dirs;
    push_dir(dirs, {Rational(1), Rational(0), Rational(0)});
    push_dir(dirs, {Rational(0), Rational(1), Rational(0)});
    push_dir(dirs, {Rational(0), Rational(0), Rational(1)});
    for (const Plane& pi : a.constraints()) push_dir(dirs, pi.normal());
    for (const Plane& pi : b.constraints()) push_dir(dirs, pi.normal());
    const auto ea = a.edges();
    const auto eb = b.edges();
    for (const auto& [i, j] : ea) {
        const Point3 da = a.vertices[j] - a.vertices[i];
        for (const auto& [k, l] : eb)
            push_dir(dirs, cross3(da, b.vertices[l] - b.vertices[k]));
    }
    // direction between the sets, for vertex-to-vertex contacts
    Point3 ca{Rational(0), Rational(0), Rational(0)}, cb = ca;
    for (const Point3& p : a.vertices) ca = ca + p;
    for (const Point3& p : b.vertices) cb = cb + p;
    push_dir(dirs, Rational(static_cast<long>(a.vertices.size())) * cb -
                   Rational(static_cast<long>(b.vertices.size())) * ca);
    return dirs;
}

} // namespace

std::vector<Point3> intersection_vertices(std::span<const Plane> cons) {
    std::vector<Point3> out;
    const int m = static_cast<int>(cons.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                const Plane &p1 = cons[i], &p2 = cons[j], &p3 = cons[k];
                const Rational det =
                    p1.a * (p2.b * p3.c - p2.c * p3.b) -
                    p1.b * (p2.a * p3.c - p2.c * p3.a) +
                    p1.c * (p2.a * p3.b - p2.b * p3.a);
                if (det.is_zero()) continue;
                const Rational bx = -p1.d, by = -p2.d, bz = -p3.d;
                Point3 x{
                    (bx * (p2.b * p3.c - p2.c * p3.b) - p1.b * (by * p3.c - p2.c * bz) + p1.c * (by * p3.b - p2.b * bz)) / det,
                    (p1.a * (by * p3.c - p2.c * bz) - bx * (p2.a * p3.c - p2.c * p3.a) + p1.c * (p2.a * bz - by * p3.a)) / det,
                    (p1.a * (p2.b * bz - by * p3.b) - p1.b * (p2.a * bz - by * p3.a) + bx * (p2.a * p3.b - p2.b * p3.a)) / det};
                bool feasible = true;
                for (const Plane& c : cons)
                    if (c.side(x) > 0) { feasible = false; break; }
                if (!feasible) continue;
                if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
            }
    return out;
}

SeparationResult separate(const ConvexHull3& a, const ConvexHull3& b, std::span<const Point3> allowed_shared) {
    SeparationResult weak_best;
    bool have_weak = false;

    for (const Point3& n : candidate_directions(a, b)) {
        const Projection ia(a.vertices, n);
        const Projection ib(b.vertices, n);
        // A above B: plane n.x = mid separates with A positive
        if (ib.hi < ia.lo) {
            const Rational mid = (ib.hi + ia.lo) / Rational(2);
            return {SeparationResult::Verdict::separated, Plane(n.x, n.y, n.z, -mid), {}, {}};
        }
        if (ia.hi < ib.lo) {
            const Rational mid = (ia.hi + ib.lo) / Rational(2);
            return {SeparationResult::Verdict::separated, Plane(-n.x, -n.y, -n.z, mid), {}, {}};
        }
        // touching projections: contact sets must be the same allowed points
        if (ib.hi == ia.lo) {
            const auto ca = ia.at(a.vertices, ia.lo);
            const auto cb2 = ib.at(b.vertices, ib.hi);
            Plane w(n.x, n.y, n.z, -ia.lo);
            if (subset_of(ca, allowed_shared) && subset_of(cb2, allowed_shared) && same_points(ca, cb2))
                return {SeparationResult::Verdict::shared_points_only, w, ca, {}};
            if (!have_weak) { weak_best = {SeparationResult::Verdict::shared_points_only, w, ca, {}}; have_weak = true; }
        }
        if (ia.hi == ib.lo) {
            const auto ca = ia.at(a.vertices, ia.hi);
            const auto cb2 = ib.at(b.vertices, ib.lo);
            Plane w(-n.x, -n.y, -n.z, ia.hi);
            if (subset_of(ca, allowed_shared) && subset_of(cb2, allowed_shared) && same_points(ca, cb2))
                return {SeparationResult::Verdict::shared_points_only, w, ca, {}};
            if (!have_weak) { weak_best = {SeparationResult::Verdict::shared_points_only, w, ca, {}}; have_weak = true; }
        }
    }

    // no candidate decided: settle by enumerating the intersection polytope
    std::vector<Plane> cons = a.constraints();
    const std::vector<Plane> cb = b.constraints();
    cons.insert(cons.end(), cb.begin(), cb.end());
    const std::vector<Point3> common = intersection_vertices(cons);

    for (const Point3& p : common)
        if (std::find(allowed_shared.begin(), allowed_shared.end(), p) == allowed_shared.end())
            return {SeparationResult::Verdict::overlapping, Plane(Rational(1), Rational(0), Rational(0), Rational(0)), {}, p};

    if (common.empty()) {
        // disjoint hulls always admit a separating-axis witness; reaching here
        // would mean the candidate family is incomplete for this input
        throw certification_failure("separate: empty intersection but no witness plane found");
    }
    if (common.size() >= 2) {
        // two allowed vertices of the intersection span a segment inside both
        // hulls, so interior points are genuine (non-allowed) overlap
        const Point3 mid = Rational(Int(1), Int(2)) * (common[0] + common[1]);
        return {SeparationResult::Verdict::overlapping, Plane(Rational(1), Rational(0), Rational(0), Rational(0)), {}, mid};
    }
    if (have_weak) {
        weak_best.shared = common;
        return weak_best;
    }
    throw certification_failure("separate: shared contact without a certifying plane");
}

PlanePolylineHits plane_polyline_intersections(const Plane& pi, std::span<const Point3> polyline) {
    if (polyline.size() < 2) throw input_error("plane_polyline_intersections: need at least one edge");
    const int n = static_cast<int>(polyline.size());
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = pi.side(polyline[i]);
    for (int i = 0; i + 1 < n; ++i)
        if (s[i] == 0 && s[i + 1] == 0)
            throw input_error("plane_polyline_intersections: edge " + std::to_string(i) + " lies in the plane");

    PlanePolylineHits hits;
    for (int i = 0; i < n; ++i) {
        if (s[i] != 0) continue;
        const bool boundary = (i == 0 || i == n - 1);
        if (!boundary && s[i - 1] * s[i + 1] > 0)
            throw input_error("plane_polyline_intersections: tangent touch at vertex " + std::to_string(i));
        hits.points.push_back(polyline[i]);
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (s[i] * s[i + 1] >= 0) continue;
        const Rational fi = pi.eval(polyline[i]);
        const Rational fj = pi.eval(polyline[i + 1]);
        const Rational t = fi / (fi - fj);
        hits.points.push_back(polyline[i] + t * (polyline[i + 1] - polyline[i]));
    }
    hits.count = static_cast<int>(hits.points.size());
    return hits;
}

} // namespace knotcert
