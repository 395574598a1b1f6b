#include <doctest.h>

#include "fixtures.hpp"
#include "knotcert/diagram.hpp"
#include "knotcert/gauss.hpp"
#include "knotcert/predicates.hpp"
#include "test_util.hpp"

using namespace knotcert;
using namespace knotcert::testutil;
namespace fx = knotcert::fixtures;

namespace {

PLKnot refinement_knot(const std::vector<std::array<long long, 3>>& data, int level) {
    const ControlPolygon scaled = scaled_by_pow2(polygon_of(data), 29);
    return PLKnot(subdivide_levels(scaled, level).refinement_vertices());
}

PLKnot subdivision_point_knot(const std::vector<std::array<long long, 3>>& data, int level) {
    const ControlPolygon scaled = scaled_by_pow2(polygon_of(data), 29);
    return PLKnot(subdivide_levels(scaled, level).subdivision_point_vertices());
}

void check_crossings(const KnotDiagram& d, const std::vector<fx::CrossingFixture>& expected) {
    REQUIRE(d.crossings.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) {
        const Crossing& c = d.crossings[i];
        const fx::CrossingFixture& e = expected[i];
        CHECK(c.at.u == Rational::parse(e.u));
        CHECK(c.at.v == Rational::parse(e.v));
        CHECK(c.over_edge == e.over_edge);
        CHECK(c.under_edge == e.under_edge);
        CHECK(c.over_depth == Rational::parse(e.over_depth));
        CHECK(c.under_depth == Rational::parse(e.under_depth));
        CHECK(c.over_depth > c.under_depth);
    }
}

} // namespace

TEST_CASE("PLKnot: construction guards") {
    CHECK_THROWS_AS(PLKnot({pt(0, 0, 0), pt(1, 0, 0)}), input_error);
    CHECK_THROWS_AS(PLKnot({pt(0, 0, 0), pt(1, 0, 0), pt(1, 0, 0)}), input_error);
    const ControlPolygon open({pt(0, 0, 0), pt(1, 0, 0), pt(1, 1, 0)});
    CHECK_THROWS_AS(PLKnot::from_closed_polygon(open), input_error);
    const PLKnot k = PLKnot::from_closed_polygon(polygon_of(fx::kK0));
    CHECK(k.vertices.size() == 6);
}

TEST_CASE("is_simple: the six-edge input curve") {
    const SimplicityCertificate cert = is_simple(PLKnot::from_closed_polygon(polygon_of(fx::kK0)));
    CHECK(cert.simple());
    CHECK(cert.collinear_vertices.empty()); // no consecutive edges collinear
    CHECK(cert.pairs_tested == 9);          // 6 edges, 9 non-adjacent pairs
}

TEST_CASE("is_simple: crossed quadrilateral is rejected with a witness") {
    // edges (0,1) and (2,3) cross at the origin
    const PLKnot bad({pt(-1, -1, 0), pt(1, 1, 0), pt(1, -1, 0), pt(-1, 1, 0)});
    const SimplicityCertificate cert = is_simple(bad);
    REQUIRE_FALSE(cert.simple());
    REQUIRE(cert.violation.has_value());
    CHECK(cert.violation->edge_a == 0);
    CHECK(cert.violation->edge_b == 2);
    REQUIRE(cert.violation->witness.has_value());
    CHECK(*cert.violation->witness == pt(0, 0, 0));
    // the kernel agrees
    const Seg3Hit hit = seg3_intersection({pt(-1, -1, 0), pt(1, 1, 0)}, {pt(1, -1, 0), pt(-1, 1, 0)});
    CHECK(hit.kind == Seg3Hit::Kind::crossing);
    CHECK(hit.at == *cert.violation->witness);
}

TEST_CASE("is_simple: both level-4 refinements") {
    for (const auto& data : {fx::kK0, fx::kK1}) {
        const PLKnot k = refinement_knot(data, 4);
        REQUIRE(k.vertices.size() == 96);
        const SimplicityCertificate cert = is_simple(k);
        CHECK(cert.simple());
        // midpoint subdivision makes every interior piece junction a flat
        // vertex; the wrap junction at the base point is a genuine corner
        CHECK(cert.collinear_vertices.size() == 15);
    }
}

TEST_CASE("project_diagram: planar convex polygon has no crossings") {
    const PLKnot square({pt(0, 0, 3), pt(4, 0, 2), pt(4, 4, 3), pt(0, 4, 2)});
    const KnotDiagram d = project_diagram(square, Axis::Z);
    CHECK(d.crossings.empty());
}

TEST_CASE("project_diagram: irregular projections are named and rejected") {
    // vertex 3 projects onto the interior of edge (0,1) when dropping Z
    const PLKnot k({pt(0, 0, 0), pt(4, 0, 0), pt(4, 4, 4), pt(2, 0, 4), pt(0, 4, 2)});
    CHECK_THROWS_AS(project_diagram(k, Axis::Z), degenerate_projection);
    // two vertices projecting together
    const PLKnot k2({pt(0, 0, 0), pt(4, 0, 0), pt(4, 4, 4), pt(0, 0, 4), pt(-4, 4, 2)});
    CHECK_THROWS_AS(project_diagram(k2, Axis::Z), degenerate_projection);
}

TEST_CASE("project_diagram: level-4 subdivision-point polygon of the base curve, XY plane") {
    const PLKnot k = subdivision_point_knot(fx::kK0, 4);
    REQUIRE(k.vertices.size() == 16);
    const KnotDiagram d = project_diagram(k, Axis::Z);
    check_crossings(d, fx::kK04CrossingsXY);
}

TEST_CASE("project_diagram: level-4 subdivision-point polygon of the perturbed curve, XY plane") {
    const PLKnot k = subdivision_point_knot(fx::kK1, 4);
    const KnotDiagram d = project_diagram(k, Axis::Z);
    check_crossings(d, fx::kK14CrossingsXY);
}

TEST_CASE("project_diagram: the YZ projection of the perturbed refinement is also regular") {
    const PLKnot k = subdivision_point_knot(fx::kK1, 4);
    const KnotDiagram d = project_diagram(k, Axis::X);
    REQUIRE(d.crossings.size() == 3);
    // three pairs of alternating crossings
    const GaussCode code = gauss_code(d);
    for (size_t i = 0; i < code.size(); ++i)
        CHECK(code[i].over != code[(i + 1) % code.size()].over);
}

TEST_CASE("crossing depth soundness: depths re-derive from the 3D edges") {
    for (const auto& data : {fx::kK0, fx::kK1}) {
        const PLKnot k = subdivision_point_knot(data, 4);
        const KnotDiagram d = project_diagram(k, Axis::Z);
        const int n = k.edge_count();
        for (const Crossing& c : d.crossings) {
            const auto depth = [&](int edge, const Rational& t) {
                return (Rational(1) - t) * k.vertices[edge].coord(Axis::Z) +
                       t * k.vertices[(edge + 1) % n].coord(Axis::Z);
            };
            CHECK(depth(c.over_edge, c.over_param) == c.over_depth);
            CHECK(depth(c.under_edge, c.under_param) == c.under_depth);
            CHECK(c.over_depth > c.under_depth);
        }
    }
}

TEST_CASE("gauss_code: the base curve shows two consecutive overcrossings") {
    const KnotDiagram d = project_diagram(subdivision_point_knot(fx::kK0, 4), Axis::Z);
    const GaussCode code = gauss_code(d);
    REQUIRE(code.size() == 6);
    CHECK(gauss_str(code) == "O1 O2 U3 U1 U2 O3");
    // reduces to the empty code: R2 on labels 1,2 then R1 on 3
    CHECK(reduce_gauss(code).empty());
}

TEST_CASE("gauss_code: the perturbed curve alternates") {
    const KnotDiagram d = project_diagram(subdivision_point_knot(fx::kK1, 4), Axis::Z);
    const GaussCode code = gauss_code(d);
    REQUIRE(code.size() == 6);
    for (size_t i = 0; i < code.size(); ++i)
        CHECK(code[i].over != code[(i + 1) % code.size()].over);
    // alternation blocks both moves
    CHECK(reduce_gauss(code).size() == 6);
    // each label appears once over, once under
    for (int label = 0; label < 3; ++label) {
        int overs = 0, unders = 0;
        for (const GaussEntry& e : code) {
            if (e.label != label) continue;
            (e.over ? overs : unders)++;
        }
        CHECK(overs == 1);
        CHECK(unders == 1);
    }
}

TEST_CASE("reduce_gauss: kinks and nested cancellations") {
    const GaussCode kink{{0, true, 1}, {0, false, 1}};
    CHECK(reduce_gauss(kink).empty());

    // O1 O2 U2 U1: R1 removes 2, then 1
    const GaussCode nested{{0, true, 1}, {1, true, 1}, {1, false, 1}, {0, false, 1}};
    CHECK(reduce_gauss(nested).empty());

    // the 5-crossing reducible braid diagram collapses to the 3-crossing core
    const PLKnot five = knot_of(fx::kBraidTrefoil5);
    const GaussCode code = gauss_code(project_diagram(five, Axis::Z));
    REQUIRE(code.size() == 10);
    const GaussCode reduced = reduce_gauss(code);
    CHECK(reduced.size() == 6);

    // reduction is idempotent and never grows
    CHECK(reduce_gauss(reduced) == reduced);
}

TEST_CASE("gauss_code: empty diagram gives the empty code") {
    const PLKnot square({pt(0, 0, 3), pt(4, 0, 2), pt(4, 4, 3), pt(0, 4, 2)});
    CHECK(gauss_code(project_diagram(square, Axis::Z)).empty());
}
