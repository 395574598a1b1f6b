#include "knotcert/predicates.hpp"

namespace knotcert {

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    return cross2(b - a, c - a).sign();
}

int plane_side(const Plane& pi, const Point3& p) {
    return pi.side(p);
}

bool collinear3(const Point3& a, const Point3& b, const Point3& c) {
    return cross3(b - a, c - a).is_zero();
}

Seg2Hit seg2_intersection(const Segment2& s, const Segment2& t) {
    const Point2 d1 = s.q - s.p;
    const Point2 d2 = t.q - t.p;
    const Point2 w = t.p - s.p;
    const Rational den = cross2(d1, d2);
    Seg2Hit hit;
    if (!den.is_zero()) {
        Rational alpha = cross2(w, d2) / den;
        Rational beta = cross2(w, d1) / den;
        if (alpha.sign() < 0 || alpha > Rational(1) || beta.sign() < 0 || beta > Rational(1))
            return hit;
        hit.kind = Seg2Hit::Kind::point;
        hit.at = {s.p.u + alpha * d1.u, s.p.v + alpha * d1.v};
        hit.alpha = alpha;
        hit.beta = beta;
        return hit;
    }
    if (!cross2(w, d1).is_zero()) return hit; // parallel, distinct lines

    // collinear: overlap interval along s
    const Rational dd = dot2(d1, d1);
    Rational t0 = dot2(w, d1) / dd;
    Rational t1 = dot2(t.q - s.p, d1) / dd;
    Rational lo = min(t0, t1), hi = max(t0, t1);
    lo = max(lo, Rational(0));
    hi = min(hi, Rational(1));
    if (lo > hi) return hit;
    if (lo == hi) {
        hit.kind = Seg2Hit::Kind::point;
        hit.alpha = lo;
        hit.at = {s.p.u + lo * d1.u, s.p.v + lo * d1.v};
        hit.beta = (hit.at == t.p) ? Rational(0) : Rational(1);
        return hit;
    }
    hit.kind = Seg2Hit::Kind::overlap;
    return hit;
}

Seg3Hit seg3_intersection(const Segment3& s, const Segment3& t) {
    const Point3 u = s.q - s.p;
    const Point3 v = t.q - t.p;
    const Point3 w = t.p - s.p;
    const Point3 uv = cross3(u, v);
    Seg3Hit hit;
    const Rational one(1);

    if (!uv.is_zero()) {
        if (!dot3(w, uv).is_zero()) return hit; // skew lines
        const Rational den = dot3(uv, uv);
        Rational sp = dot3(cross3(w, v), uv) / den;
        Rational tp = dot3(cross3(w, u), uv) / den;
        if (sp.sign() < 0 || sp > one || tp.sign() < 0 || tp > one) return hit;
        hit.at = s.p + sp * u;
        bool interior = sp.sign() > 0 && sp < one && tp.sign() > 0 && tp < one;
        hit.kind = interior ? Seg3Hit::Kind::crossing : Seg3Hit::Kind::touching;
        return hit;
    }
    if (!cross3(w, u).is_zero()) return hit; // parallel, distinct lines

    const Rational dd = dot3(u, u);
    Rational t0 = dot3(w, u) / dd;
    Rational t1 = dot3(t.q - s.p, u) / dd;
    Rational lo = min(t0, t1), hi = max(t0, t1);
    lo = max(lo, Rational(0));
    hi = min(hi, one);
    if (lo > hi) return hit;
    if (lo == hi) {
        hit.kind = Seg3Hit::Kind::touching;
        hit.at = s.p + lo * u;
        return hit;
    }
    hit.kind = Seg3Hit::Kind::overlap;
    hit.at = s.p + ((lo + hi) / Rational(2)) * u;
    return hit;
}

} // namespace knotcert
