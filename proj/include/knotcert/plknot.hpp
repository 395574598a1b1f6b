#pragma once

#include <optional>
#include <vector>

#include "knotcert/bezier.hpp"
#include "knotcert/geometry.hpp"

namespace knotcert {

/// Closed PL curve: ordered vertices, edge i runs vertex i -> i+1 (mod n),
/// no duplicated closing vertex.
struct PLKnot {
    std::vector<Point3> vertices;

    explicit PLKnot(std::vector<Point3> verts);

    /// From a closed control polygon (drops the duplicated endpoint).
    static PLKnot from_closed_polygon(const ControlPolygon& cp);

    int edge_count() const { return static_cast<int>(vertices.size()); }
    Segment3 edge(int i) const {
        const int n = edge_count();
        return {vertices[i % n], vertices[(i + 1) % n]};
    }
};

struct SimplicityCertificate {
    enum class Verdict { simple, self_intersecting } verdict;
    struct Violation {
        int edge_a = -1, edge_b = -1;
        std::optional<Point3> witness;
    };
    std::optional<Violation> violation;   // set unless simple
    int pairs_tested = 0;                 // non-adjacent pairs checked disjoint
    std::vector<int> collinear_vertices;  // vertices whose two edges are collinear

    bool simple() const { return verdict == Verdict::simple; }
};

/// Exact simplicity test: each consecutive edge pair meets only at its shared
/// vertex, each non-adjacent pair is fully disjoint. Collinear junction
/// vertices are reported alongside (midpoint subdivision always creates them;
/// they do not break injectivity).
SimplicityCertificate is_simple(const PLKnot& k);

} // namespace knotcert
