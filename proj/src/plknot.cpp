#include "knotcert/plknot.hpp"

#include "knotcert/errors.hpp"
#include "knotcert/predicates.hpp"

namespace knotcert {

PLKnot::PLKnot(std::vector<Point3> verts) : vertices(std::move(verts)) {
    if (vertices.size() < 3) throw input_error("PL knot needs at least 3 vertices");
    const int n = static_cast<int>(vertices.size());
    for (int i = 0; i < n; ++i)
        if (vertices[i] == vertices[(i + 1) % n])
            throw input_error("PL knot has equal consecutive vertices at index " + std::to_string(i));
}

PLKnot PLKnot::from_closed_polygon(const ControlPolygon& cp) {
    if (!cp.closed) throw input_error("polygon is not closed (first point != last point)");
    std::vector<Point3> verts(cp.points.begin(), cp.points.end() - 1);
    return PLKnot(std::move(verts));
}

SimplicityCertificate is_simple(const PLKnot& k) {
    SimplicityCertificate cert;
    cert.verdict = SimplicityCertificate::Verdict::simple;
    const int n = k.edge_count();

    // Collinear junction vertices are reported but do not decide the verdict:
    // a vertex lying between its neighbours (as every midpoint-subdivision
    // point does) keeps the curve injective. A reversing collinear pair
    // overlaps and is caught by the adjacent-edge intersection test below.
    for (int i = 0; i < n; ++i) {
        const Point3& a = k.vertices[i];
        const Point3& b = k.vertices[(i + 1) % n];
        const Point3& c = k.vertices[(i + 2) % n];
        if (collinear3(a, b, c)) cert.collinear_vertices.push_back((i + 1) % n);
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Seg3Hit hit = seg3_intersection(k.edge(i), k.edge(j));
            if (adjacent) {
                const Point3& shared = (j == i + 1) ? k.vertices[j] : k.vertices[0];
                // non-collinear adjacent edges can only meet at the shared vertex
                if (hit.kind == Seg3Hit::Kind::touching && hit.at == shared) continue;
                cert.verdict = SimplicityCertificate::Verdict::self_intersecting;
                cert.violation = {i, j, hit.kind == Seg3Hit::Kind::overlap ? std::optional<Point3>{} : hit.at};
                return cert;
            }
            ++cert.pairs_tested;
            if (hit.kind == Seg3Hit::Kind::disjoint) continue;
            cert.verdict = SimplicityCertificate::Verdict::self_intersecting;
            cert.violation = {i, j, hit.at};
            return cert;
        }
    }
    return cert;
}

} // namespace knotcert
