#include "knotcert/diagram.hpp"

#include <algorithm>

#include "knotcert/errors.hpp"
#include "knotcert/predicates.hpp"

namespace knotcert {

KnotDiagram project_diagram(const PLKnot& k, Axis drop) {
    const int n = k.edge_count();
    KnotDiagram d;
    d.projection_axis = drop;
    d.projected_vertices.reserve(n);
    for (const Point3& v : k.vertices) d.projected_vertices.push_back(project_drop(v, drop));
    const auto& pv = d.projected_vertices;

    for (int i = 0; i < n; ++i)
        if (pv[i] == pv[(i + 1) % n])
            throw degenerate_projection("edge " + std::to_string(i) + " projects to a point");

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pv[i] == pv[j])
                throw degenerate_projection("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                            " project to the same point");

    // flat vertices (same-direction collinear projected edges) are regular;
    // a reversing collinear pair would overlap in projection
    for (int i = 0; i < n; ++i) {
        const Point2& prev = pv[(i + n - 1) % n];
        const Point2& cur = pv[i];
        const Point2& next = pv[(i + 1) % n];
        if (orient2d(prev, cur, next) == 0 && dot2(cur - prev, next - cur).sign() < 0)
            throw degenerate_projection("projected edges reverse at vertex " + std::to_string(i));
    }

    // vertex over a non-incident edge's interior
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < n; ++e) {
            if (e == v || (e + 1) % n == v) continue;
            const Point2& a = pv[e];
            const Point2& b = pv[(e + 1) % n];
            if (orient2d(a, b, pv[v]) != 0) continue;
            const Point2 dir = b - a;
            const Rational t = dot2(pv[v] - a, dir) / dot2(dir, dir);
            if (t.sign() > 0 && t < Rational(1))
                throw degenerate_projection("vertex " + std::to_string(v) + " projects onto edge " +
                                            std::to_string(e));
        }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Seg2Hit hit = seg2_intersection({pv[i], pv[(i + 1) % n]}, {pv[j], pv[(j + 1) % n]});
            if (hit.kind == Seg2Hit::Kind::overlap)
                throw degenerate_projection("projected edges " + std::to_string(i) + " and " +
                                            std::to_string(j) + " overlap");
            if (adjacent || hit.kind == Seg2Hit::Kind::empty) continue;
            // vertex checks above force any surviving hit strictly interior
            const Rational di = (Rational(1) - hit.alpha) * k.vertices[i].coord(drop) +
                                hit.alpha * k.vertices[(i + 1) % n].coord(drop);
            const Rational dj = (Rational(1) - hit.beta) * k.vertices[j].coord(drop) +
                                hit.beta * k.vertices[(j + 1) % n].coord(drop);
            if (di == dj)
                throw input_error("project_diagram: edges " + std::to_string(i) + " and " +
                                  std::to_string(j) + " intersect in 3D (knot not simple)");
            Crossing c;
            c.at = hit.at;
            if (di > dj) {
                c.over_edge = i;  c.under_edge = j;
                c.over_param = hit.alpha; c.under_param = hit.beta;
                c.over_depth = di; c.under_depth = dj;
            } else {
                c.over_edge = j;  c.under_edge = i;
                c.over_param = hit.beta; c.under_param = hit.alpha;
                c.over_depth = dj; c.under_depth = di;
            }
            const Point2 od = pv[(c.over_edge + 1) % n] - pv[c.over_edge];
            const Point2 ud = pv[(c.under_edge + 1) % n] - pv[c.under_edge];
            c.sign = cross2(od, ud).sign();
            d.crossings.push_back(std::move(c));
        }
    }

    for (size_t i = 0; i < d.crossings.size(); ++i)
        for (size_t j = i + 1; j < d.crossings.size(); ++j)
            if (d.crossings[i].at == d.crossings[j].at)
                throw degenerate_projection("triple point at " + d.crossings[i].at.str());

    std::sort(d.crossings.begin(), d.crossings.end(), [](const Crossing& a, const Crossing& b) {
        const int ea = std::min(a.over_edge, a.under_edge);
        const int eb = std::min(b.over_edge, b.under_edge);
        if (ea != eb) return ea < eb;
        const Rational& pa = a.over_edge < a.under_edge ? a.over_param : a.under_param;
        const Rational& pb = b.over_edge < b.under_edge ? b.over_param : b.under_param;
        return pa < pb;
    });
    return d;
}

} // namespace knotcert
