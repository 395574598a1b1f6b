#include "knotcert/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "knotcert/errors.hpp"
#include "knotcert/predicates.hpp"

namespace knotcert {

namespace {

// canonical key for a plane: scale so the first nonzero coefficient is +1
std::array<Rational, 4> plane_key(const Plane& pi) {
    std::array<Rational, 4> k{pi.a, pi.b, pi.c, pi.d};
    Rational lead;
    for (const Rational& c : k)
        if (!c.is_zero()) { lead = c; break; }
    for (Rational& c : k) c = c / lead;
    return k;
}

Axis dominant_axis(const Point3& n) {
    Rational ax = n.x.abs(), ay = n.y.abs(), az = n.z.abs();
    if (ax >= ay && ax >= az) return Axis::X;
    if (ay >= az) return Axis::Y;
    return Axis::Z;
}

// indices of the 2D convex hull corners, counterclockwise (monotone chain,
// strictly convex turns only: edge-interior points are dropped)
std::vector<int> hull2d_ccw(const std::vector<Point2>& pts) {
    std::vector<int> idx(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts[a].u != pts[b].u) return pts[a].u < pts[b].u;
        return pts[a].v < pts[b].v;
    });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] == pts[b]; }), idx.end());
    if (idx.size() <= 2) return idx;
    std::vector<int> lower, upper;
    for (int i : idx) {
        while (lower.size() >= 2 &&
               orient2d(pts[lower[lower.size() - 2]], pts[lower.back()], pts[i]) <= 0)
            lower.pop_back();
        lower.push_back(i);
    }
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        while (upper.size() >= 2 &&
               orient2d(pts[upper[upper.size() - 2]], pts[upper.back()], pts[*it]) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

} // namespace

ConvexHull3 convex_hull(std::span<const Point3> points) {
    if (points.empty()) throw input_error("convex_hull: empty point set");

    std::vector<Point3> pts;
    for (const Point3& p : points)
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);

    ConvexHull3 hull;

    if (pts.size() == 1) {
        hull.dim = HullDim::point;
        hull.vertices = pts;
        return hull;
    }

    // collinearity: direction of the first distinct pair
    const Point3 dir = pts[1] - pts[0];
    bool all_collinear = true;
    for (const Point3& p : pts)
        if (!cross3(dir, p - pts[0]).is_zero()) { all_collinear = false; break; }
    if (all_collinear) {
        hull.dim = HullDim::collinear;
        const Rational dd = dot3(dir, dir);
        auto param = [&](const Point3& p) { return dot3(p - pts[0], dir) / dd; };
        Point3 lo = pts[0], hi = pts[0];
        Rational plo = param(lo), phi = param(hi);
        for (const Point3& p : pts) {
            Rational t = param(p);
            if (t < plo) { plo = t; lo = p; }
            if (t > phi) { phi = t; hi = p; }
        }
        hull.vertices = {lo, hi};
        return hull;
    }

    // coplanarity: plane through the first non-collinear triple
    Point3 base_normal;
    for (size_t k = 2; k < pts.size(); ++k) {
        base_normal = cross3(dir, pts[k] - pts[0]);
        if (!base_normal.is_zero()) break;
    }
    const Plane base = Plane::through(base_normal, pts[0]);
    bool all_coplanar = true;
    for (const Point3& p : pts)
        if (base.side(p) != 0) { all_coplanar = false; break; }

    if (all_coplanar) {
        hull.dim = HullDim::planar;
        const Axis drop = dominant_axis(base_normal);
        std::vector<Point2> proj;
        proj.reserve(pts.size());
        for (const Point3& p : pts) proj.push_back(project_drop(p, drop));
        std::vector<int> ring = hull2d_ccw(proj);
        std::vector<Point3> verts;
        verts.reserve(ring.size());
        for (int i : ring) verts.push_back(pts[i]);
        hull.vertices = std::move(verts);
        Facet f;
        f.plane = base;
        f.ring.resize(hull.vertices.size());
        for (size_t i = 0; i < hull.vertices.size(); ++i) f.ring[i] = static_cast<int>(i);
        // orient the stored ring counterclockwise around the plane normal
        if (hull.vertices.size() >= 3) {
            const Point3 c = cross3(hull.vertices[1] - hull.vertices[0], hull.vertices[2] - hull.vertices[0]);
            if (dot3(c, base.normal()).sign() < 0)
                std::reverse(f.ring.begin(), f.ring.end());
        }
        hull.facets.push_back(std::move(f));
        return hull;
    }

    // full-dimensional: supporting planes from point triples
    hull.dim = HullDim::full3d;
    std::vector<std::pair<std::array<Rational, 4>, Plane>> supports;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Point3 nv = cross3(pts[j] - pts[i], pts[k] - pts[i]);
                if (nv.is_zero()) continue;
                Plane pi = Plane::through(nv, pts[i]);
                bool pos = false, neg = false;
                for (const Point3& p : pts) {
                    int s = pi.side(p);
                    if (s > 0) pos = true;
                    if (s < 0) neg = true;
                    if (pos && neg) break;
                }
                if (pos && neg) continue;
                if (pos) pi = pi.flipped(); // outward: interior side <= 0
                auto key = plane_key(pi);
                bool dup = false;
                for (auto& [k2, p2] : supports)
                    if (k2 == key) { dup = true; break; }
                if (!dup) supports.emplace_back(std::move(key), std::move(pi));
            }

    // facet rings + hull vertex set
    std::vector<Point3> verts;
    auto vert_index = [&](const Point3& p) {
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == p) return static_cast<int>(i);
        verts.push_back(p);
        return static_cast<int>(verts.size() - 1);
    };
    std::vector<std::pair<Plane, std::vector<Point3>>> rings;
    for (auto& [key, pi] : supports) {
        std::vector<Point3> on;
        for (const Point3& p : pts)
            if (pi.side(p) == 0) on.push_back(p);
        const Axis drop = dominant_axis(pi.normal());
        std::vector<Point2> proj;
        proj.reserve(on.size());
        for (const Point3& p : on) proj.push_back(project_drop(p, drop));
        std::vector<int> ring2 = hull2d_ccw(proj);
        std::vector<Point3> ring;
        ring.reserve(ring2.size());
        for (int i : ring2) ring.push_back(on[i]);
        if (ring.size() >= 3) {
            const Point3 c = cross3(ring[1] - ring[0], ring[2] - ring[0]);
            if (dot3(c, pi.normal()).sign() < 0)
                std::reverse(ring.begin(), ring.end());
        }
        rings.emplace_back(pi, std::move(ring));
    }
    for (auto& [pi, ring] : rings) {
        Facet f;
        f.plane = pi;
        for (const Point3& p : ring) f.ring.push_back(vert_index(p));
        hull.facets.push_back(std::move(f));
    }
    hull.vertices = std::move(verts);
    return hull;
}

bool ConvexHull3::contains(const Point3& p) const {
    switch (dim) {
        case HullDim::point:
            return p == vertices[0];
        case HullDim::collinear: {
            const Point3 d = vertices[1] - vertices[0];
            if (!cross3(d, p - vertices[0]).is_zero()) return false;
            const Rational t = dot3(p - vertices[0], d) / dot3(d, d);
            return t.sign() >= 0 && t <= Rational(1);
        }
        case HullDim::planar: {
            const Facet& f = facets[0];
            if (f.plane.side(p) != 0) return false;
            const Axis drop = dominant_axis(f.plane.normal());
            const Point2 q = project_drop(p, drop);
            // ring is ccw around the normal; ccw in the projection iff the
            // normal's dropped component is positive
            const int flip = f.plane.normal().coord(drop).sign();
            for (size_t i = 0; i < f.ring.size(); ++i) {
                const Point2 a = project_drop(vertices[f.ring[i]], drop);
                const Point2 b = project_drop(vertices[f.ring[(i + 1) % f.ring.size()]], drop);
                if (flip * orient2d(a, b, q) < 0) return false;
            }
            return true;
        }
        case HullDim::full3d:
            for (const Facet& f : facets)
                if (f.plane.side(p) > 0) return false;
            return true;
    }
    return false;
}

std::vector<std::pair<int, int>> ConvexHull3::edges() const {
    std::set<std::pair<int, int>> set;
    auto add = [&](int a, int b) { set.insert({std::min(a, b), std::max(a, b)}); };
    if (dim == HullDim::collinear) {
        add(0, 1);
    } else {
        for (const Facet& f : facets)
            for (size_t i = 0; i < f.ring.size(); ++i)
                add(f.ring[i], f.ring[(i + 1) % f.ring.size()]);
    }
    return {set.begin(), set.end()};
}

std::vector<Plane> ConvexHull3::constraints() const {
    std::vector<Plane> out;
    auto add_equality = [&](const Plane& pi) {
        out.push_back(pi);
        out.push_back(pi.flipped());
    };
    switch (dim) {
        case HullDim::point: {
            const Point3& p = vertices[0];
            add_equality(Plane(Rational(1), Rational(0), Rational(0), -p.x));
            add_equality(Plane(Rational(0), Rational(1), Rational(0), -p.y));
            add_equality(Plane(Rational(0), Rational(0), Rational(1), -p.z));
            break;
        }
        case HullDim::collinear: {
            const Point3 d = vertices[1] - vertices[0];
            Point3 n1 = cross3(d, Point3{Rational(1), Rational(0), Rational(0)});
            if (n1.is_zero()) n1 = cross3(d, Point3{Rational(0), Rational(1), Rational(0)});
            const Point3 n2 = cross3(d, n1);
            add_equality(Plane::through(n1, vertices[0]));
            add_equality(Plane::through(n2, vertices[0]));
            out.push_back(Plane::through(Point3{-d.x, -d.y, -d.z}, vertices[0])); // t >= 0
            out.push_back(Plane::through(d, vertices[1]));                        // t <= 1
            break;
        }
        case HullDim::planar: {
            const Facet& f = facets[0];
            add_equality(f.plane);
            const Point3 n = f.plane.normal();
            for (size_t i = 0; i < f.ring.size(); ++i) {
                const Point3& a = vertices[f.ring[i]];
                const Point3& b = vertices[f.ring[(i + 1) % f.ring.size()]];
                Point3 wall = cross3(b - a, n);
                Plane pi = Plane::through(wall, a);
                // orient interior <= 0 using any ring vertex off this edge
                for (int vi : f.ring) {
                    const int s = pi.side(vertices[vi]);
                    if (s > 0) { pi = pi.flipped(); break; }
                    if (s < 0) break;
                }
                out.push_back(pi);
            }
            break;
        }
        case HullDim::full3d:
            for (const Facet& f : facets) out.push_back(f.plane);
            break;
    }
    return out;
}

} // namespace knotcert
