#include "knotcert/homotopy.hpp"

#include "knotcert/errors.hpp"

namespace knotcert {

VertexHomotopy::VertexHomotopy(ControlPolygon base_polygon, int vertex_index, Point3 end_position)
    : base(std::move(base_polygon)), vertex(vertex_index), start(), end(std::move(end_position)) {
    const int last = static_cast<int>(base.points.size()) - 1;
    if (vertex <= 0 || vertex >= last)
        throw input_error("VertexHomotopy: vertex must be an interior index");
    start = base.points[vertex];
    // both ends must be valid closed polygons
    std::vector<Point3> moved = base.points;
    moved[vertex] = end;
    ControlPolygon check(moved);
    if (!base.closed || !check.closed) throw input_error("VertexHomotopy: polygons must be closed");
}

ControlPolygon polygon_at(const VertexHomotopy& h, const Rational& s) {
    if (s.sign() < 0 || s > Rational(1)) throw input_error("polygon_at: s outside [0,1]");
    std::vector<Point3> pts = h.base.points;
    pts[h.vertex] = (Rational(1) - s) * h.start + s * h.end;
    return ControlPolygon(std::move(pts));
}

TransitionInterval bisect_transition(const VertexHomotopy& h, const Rational& tol, int max_level) {
    if (tol.sign() <= 0) throw input_error("bisect_transition: tolerance must be positive");

    auto [cls0, cert0] = bezier_knot_type(polygon_at(h, Rational(0)), max_level);
    auto [cls1, cert1] = bezier_knot_type(polygon_at(h, Rational(1)), max_level);
    if (cls0.kind == cls1.kind)
        throw input_error("bisect_transition: endpoint knot classes are equal (" + cls0.name() + ")");

    TransitionInterval out;
    out.lo = Rational(0);
    out.hi = Rational(1);
    out.class_lo = std::move(cls0);
    out.class_hi = std::move(cls1);
    out.cert_lo = std::move(cert0);
    out.cert_hi = std::move(cert1);

    while (out.hi - out.lo > tol) {
        const Rational mid = (out.lo + out.hi) / Rational(2);
        ++out.midpoints_tried;
        std::pair<KnotClass, IsotopyCertificate> r;
        try {
            r = bezier_knot_type(polygon_at(h, mid), max_level);
        } catch (const certification_failure&) {
            out.uncertified_gap = true;
            return out;
        }
        auto& [cls, cert] = r;
        if (cls.kind == out.class_lo.kind) {
            out.lo = mid;
            out.cert_lo = std::move(cert);
        } else if (cls.kind == out.class_hi.kind) {
            out.hi = mid;
            out.cert_hi = std::move(cert);
        } else {
            throw certification_failure("bisect_transition: midpoint s = " + mid.str() +
                                        " certifies a third class " + cls.name());
        }
    }
    return out;
}

} // namespace knotcert
