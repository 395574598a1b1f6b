#include "knotcert/enclosure.hpp"

#include <algorithm>

#include "knotcert/errors.hpp"

namespace knotcert {

namespace {

Point3 primitive_integer(const Point3& v) {
    Int lcm = 1;
    for (const Rational* r : {&v.x, &v.y, &v.z}) {
        Int den = r->denominator();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    Int nx = (Rational(lcm) * v.x).numerator();
    Int ny = (Rational(lcm) * v.y).numerator();
    Int nz = (Rational(lcm) * v.z).numerator();
    Int g = 0;
    for (const Int* n : {&nx, &ny, &nz})
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n->get_mpz_t());
    if (g != 0) { nx /= g; ny /= g; nz /= g; }
    Point3 out{Rational(nx), Rational(ny), Rational(nz)};
    // fix sign: first nonzero component positive
    for (const Rational* r : {&out.x, &out.y, &out.z}) {
        if (r->is_zero()) continue;
        if (r->sign() < 0) out = {-out.x, -out.y, -out.z};
        break;
    }
    return out;
}

// primitive normal to `dir` with a zero component, preferring zero Z
std::optional<Point3> zero_component_normal(const Point3& dir) {
    const Rational zero(0);
    // zero z: (dir.y, -dir.x, 0)
    if (!(dir.x.is_zero() && dir.y.is_zero()))
        return primitive_integer({dir.y, -dir.x, zero});
    if (!(dir.x.is_zero() && dir.z.is_zero()))
        return primitive_integer({dir.z, zero, -dir.x});
    if (!(dir.y.is_zero() && dir.z.is_zero()))
        return primitive_integer({zero, dir.z, -dir.y});
    return std::nullopt;
}

} // namespace

std::pair<Point3, Point3> default_enclosure_normals(const ControlPolygon& piece, const Point3& mid) {
    const Point3 dl = piece.front() - mid;
    const Point3 dr = piece.back() - mid;
    auto nl = zero_component_normal(dl);
    auto nr = zero_component_normal(dr);
    if (!nl || !nr) throw input_error("default_enclosure_normals: degenerate line direction");
    return {*nl, *nr};
}

Enclosure build_enclosure(const ControlPolygon& piece, const Point3& mid,
                          const Point3& normal_l, const Point3& normal_r) {
    if (normal_l.is_zero() || normal_r.is_zero())
        throw input_error("build_enclosure: zero normal");
    if (!(evaluate(piece, Rational(Int(1), Int(2))) == mid))
        throw input_error("build_enclosure: mid is not the curve midpoint of the piece");

    const Point3 dl = piece.front() - mid;
    const Point3 dr = piece.back() - mid;
    Point3 nl = normal_l, nr = normal_r;
    bool swapped = false;
    const bool l_fits = dot3(nl, dl).is_zero();
    const bool r_fits = dot3(nr, dr).is_zero();
    if (!(l_fits && r_fits)) {
        if (dot3(normal_r, dl).is_zero() && dot3(normal_l, dr).is_zero()) {
            std::swap(nl, nr);
            swapped = true;
        } else {
            throw input_error("build_enclosure: normal not orthogonal to its line");
        }
    }

    Enclosure e;
    e.hull = convex_hull(piece.points);
    e.mid = mid;
    e.normals_swapped = swapped;

    const Plane pl = Plane::through(nl, mid);
    const Plane pr = Plane::through(nr, mid);
    for (int sl : {1, -1})
        for (int sr : {1, -1}) {
            const Plane cl = sl > 0 ? pl : pl.flipped();
            const Plane cr = sr > 0 ? pr : pr.flipped();
            bool all = true;
            for (const Point3& p : piece.points)
                if (cl.side(p) < 0 && cr.side(p) < 0) { all = false; break; }
            if (all) {
                e.left_half = cl;
                e.right_half = cr;
                return e;
            }
        }
    throw certification_failure("build_enclosure: no half-space orientation covers all control points");
}

ConvexHull3 clip_hull(const ConvexHull3& hull, const Plane& keep_nonneg) {
    std::vector<Point3> pts;
    for (const Point3& v : hull.vertices)
        if (keep_nonneg.side(v) >= 0) pts.push_back(v);
    for (const auto& [i, j] : hull.edges()) {
        const Rational fi = keep_nonneg.eval(hull.vertices[i]);
        const Rational fj = keep_nonneg.eval(hull.vertices[j]);
        if (fi.sign() * fj.sign() >= 0) continue;
        const Rational t = fi / (fi - fj);
        pts.push_back(hull.vertices[i] + t * (hull.vertices[j] - hull.vertices[i]));
    }
    if (pts.empty()) throw input_error("clip_hull: clipped polytope is empty");
    return convex_hull(pts);
}

EnclosureSeparation enclosure_disjoint(const Enclosure& e, const ConvexHull3& other,
                                       std::span<const Point3> allowed_shared) {
    const ConvexHull3 part_l = clip_hull(e.hull, e.left_half);
    const ConvexHull3 part_r = clip_hull(e.hull, e.right_half);
    EnclosureSeparation out{
        SeparationResult::Verdict::separated,
        separate(part_l, other, allowed_shared),
        separate(part_r, other, allowed_shared),
        {}};
    using V = SeparationResult::Verdict;
    if (out.left.verdict == V::overlapping || out.right.verdict == V::overlapping) {
        out.verdict = V::overlapping;
        return out;
    }
    for (const SeparationResult* r : {&out.left, &out.right})
        for (const Point3& p : r->shared)
            if (std::find(out.shared.begin(), out.shared.end(), p) == out.shared.end())
                out.shared.push_back(p);
    out.verdict = out.shared.empty() ? V::separated : V::shared_points_only;
    return out;
}

EnclosureEvidence curve_in_enclosure(const ControlPolygon& piece, const Enclosure& e,
                                     std::span<const Rational> samples) {
    EnclosureEvidence ev;
    const auto hl = plane_polyline_intersections(e.left_half, piece.points);
    ev.plane_polyline_count_l = hl.count;
    if (hl.count != 2)
        throw certification_failure("curve_in_enclosure: left plane meets the control polyline " +
                                    std::to_string(hl.count) + " times, expected 2");
    const auto hr = plane_polyline_intersections(e.right_half, piece.points);
    ev.plane_polyline_count_r = hr.count;
    if (hr.count != 2)
        throw certification_failure("curve_in_enclosure: right plane meets the control polyline " +
                                    std::to_string(hr.count) + " times, expected 2");
    ev.control_points_inside = true;
    for (const Point3& p : piece.points)
        if (!e.contains(p)) {
            ev.control_points_inside = false;
            throw certification_failure("curve_in_enclosure: control point " + p.str() + " outside the enclosure");
        }
    for (const Rational& t : samples) {
        if (t.sign() <= 0 || t >= Rational(1))
            throw input_error("curve_in_enclosure: sample outside (0,1)");
        const bool inside = e.contains(evaluate(piece, t));
        ev.samples.emplace_back(t, inside);
        if (!inside)
            throw certification_failure("curve_in_enclosure: curve sample at t = " + t.str() + " outside the enclosure");
    }
    return ev;
}

} // namespace knotcert
