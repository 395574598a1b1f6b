#include <doctest.h>

#include "fixtures.hpp"
#include "knotcert/predicates.hpp"
#include "test_util.hpp"

using namespace knotcert;
using namespace knotcert::testutil;
namespace fx = knotcert::fixtures;

namespace {

const Rational kHalf(Int(1), Int(2));

void check_pieces_equal(const SubdivisionForest& forest,
                        const std::vector<std::vector<std::array<long long, 3>>>& table) {
    REQUIRE(forest.pieces.size() == table.size());
    for (size_t k = 0; k < table.size(); ++k) {
        REQUIRE(forest.pieces[k].points.size() == table[k].size());
        for (size_t i = 0; i < table[k].size(); ++i)
            CHECK(forest.pieces[k].points[i] == pt(table[k][i]));
    }
}

} // namespace

TEST_CASE("control polygon: validation") {
    CHECK_THROWS_AS(ControlPolygon({pt(0, 0, 0)}), input_error);
    CHECK_THROWS_AS(ControlPolygon({pt(0, 0, 0), pt(0, 0, 0)}), input_error);
    CHECK(polygon_of(fx::kK1).closed);
    CHECK_FALSE(ControlPolygon({pt(0, 0, 0), pt(1, 0, 0)}).closed);
}

TEST_CASE("evaluate: endpoints and domain") {
    const ControlPolygon k1 = polygon_of(fx::kK1);
    CHECK(evaluate(k1, Rational(0)) == k1.front());
    CHECK(evaluate(k1, Rational(1)) == k1.back());
    CHECK_THROWS_AS(evaluate(k1, Rational(2)), input_error);
    CHECK_THROWS_AS(evaluate(k1, -kHalf), input_error);
}

TEST_CASE("evaluate: agrees with the Bernstein sum") {
    testutil::Rng rng(11);
    const ControlPolygon k1 = polygon_of(fx::kK1);
    for (int i = 0; i < 40; ++i) {
        const Rational t = rng.unit_rational(64);
        CHECK(evaluate(k1, t) == bernstein_evaluate(k1, t));
    }
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point3> pts;
        for (int i = 0; i < 5; ++i) pts.push_back(pt(rng.integer(-20, 20), rng.integer(-20, 20), rng.integer(-20, 20)));
        ControlPolygon cp;
        try {
            cp = ControlPolygon(pts);
        } catch (const input_error&) {
            continue; // duplicate consecutive points; resample
        }
        for (int i = 0; i < 10; ++i) {
            const Rational t = rng.unit_rational(32);
            CHECK(evaluate(cp, t) == bernstein_evaluate(cp, t));
        }
    }
}

TEST_CASE("mid-curve point of the last level-3 piece") {
    const ControlPolygon scaled = scaled_by_pow2(polygon_of(fx::kK1), 29);
    const SubdivisionForest forest = subdivide_levels(scaled, 3);
    const Point3 mid = evaluate(forest.pieces[7], kHalf);
    CHECK(mid == pt(4399876800LL, -4859733312LL, -849023360LL));
    // same point two other ways: Bernstein sum on the piece, and the global curve
    CHECK(bernstein_evaluate(forest.pieces[7], kHalf) == mid);
    CHECK(evaluate(scaled, Rational(Int(15), Int(16))) == mid);
}

TEST_CASE("decasteljau_split: scaled fixture and affine invariance") {
    const ControlPolygon scaled = scaled_by_pow2(polygon_of(fx::kK1), 29);
    const auto [left, right] = decasteljau_split(scaled, kHalf);
    CHECK(left.points[1] == pt(-4026531840LL, -23085449216LL, -8053063680LL));
    CHECK(right.back() == pt(0LL, 4831838208LL, 10737418240LL));
    CHECK(left.back() == right.front());
    CHECK(left.back() == evaluate(scaled, kHalf));
    CHECK_THROWS_AS(decasteljau_split(scaled, Rational(0)), input_error);
    CHECK_THROWS_AS(decasteljau_split(scaled, Rational(1)), input_error);

    const ControlPolygon line({pt(0, 0, 0), pt(2, 2, 2), pt(4, 4, 4), pt(8, 8, 8)});
    const auto [a, b] = decasteljau_split(line, kHalf);
    for (const ControlPolygon* half : {&a, &b})
        for (size_t i = 2; i < half->points.size(); ++i)
            CHECK(collinear3(half->points[0], half->points[1], half->points[i]));
}

TEST_CASE("subdivide_levels: level zero is the identity") {
    const ControlPolygon k1 = polygon_of(fx::kK1);
    const SubdivisionForest forest = subdivide_levels(k1, 0);
    REQUIRE(forest.pieces.size() == 1);
    CHECK(forest.pieces[0].points == k1.points);
}

TEST_CASE("subdivide_levels: reference tables, bit for bit") {
    const ControlPolygon scaled = scaled_by_pow2(polygon_of(fx::kK1), 29);
    check_pieces_equal(subdivide_levels(scaled, 1), fx::kTableIVLevel1);
    check_pieces_equal(subdivide_levels(scaled, 2), fx::kTableIVLevel2);
    check_pieces_equal(subdivide_levels(scaled, 3), fx::kTableIIILevel3);
}

TEST_CASE("subdivide_levels: piece endpoints chain") {
    const SubdivisionForest forest = subdivide_levels(polygon_of(fx::kK0), 3);
    for (size_t k = 0; k + 1 < forest.pieces.size(); ++k)
        CHECK(forest.pieces[k].back() == forest.pieces[k + 1].front());
    CHECK(forest.refinement_vertices().size() == 8 * 6);
    CHECK(forest.subdivision_point_vertices().size() == 8);
}

TEST_CASE("scale_for_subdivision: the scaling formula") {
    const ControlPolygon k1 = polygon_of(fx::kK1);
    const ScaledPolygon s4 = scale_for_subdivision(k1, 4);
    CHECK(s4.m == 29); // 4 * (6 + 1) + 1
    CHECK(s4.polygon.points[0] == pt(0LL, 4831838208LL, 10737418240LL));

    // level 0 instantiates the formula to m = 1
    const ScaledPolygon s0 = scale_for_subdivision(k1, 0);
    CHECK(s0.m == 1);
    CHECK(s0.polygon.points[1] == Rational(2) * k1.points[1]);

    std::vector<Point3> frac = k1.points;
    frac[1].x = Rational(Int(1), Int(3));
    CHECK_THROWS_AS(scale_for_subdivision(ControlPolygon(frac), 4), input_error);
}

TEST_CASE("scale_for_subdivision: keeps every subdivided coordinate integral") {
    const ScaledPolygon s = scale_for_subdivision(polygon_of(fx::kK0), 4);
    const SubdivisionForest forest = subdivide_levels(s.polygon, 4);
    for (const ControlPolygon& piece : forest.pieces)
        for (const Point3& p : piece.points) {
            CHECK(p.x.is_integer());
            CHECK(p.y.is_integer());
            CHECK(p.z.is_integer());
        }
}

TEST_CASE("hodograph: examples and the derivative relation") {
    const ControlPolygon line({pt(0, 0, 0), pt(1, 0, 0)});
    const ControlPolygon dline = hodograph(line);
    REQUIRE(dline.points.size() == 1);
    CHECK(dline.points[0] == pt(1, 0, 0));

    const ControlPolygon quad({pt(0, 0, 0), pt(1, 1, 0), pt(2, 0, 0)});
    const ControlPolygon dquad = hodograph(quad);
    REQUIRE(dquad.points.size() == 2);
    CHECK(dquad.points[0] == pt(2, 2, 0));
    CHECK(dquad.points[1] == pt(2, -2, 0));

    // piece monotone in X has an everywhere-positive X derivative polygon
    const ControlPolygon scaled = scaled_by_pow2(polygon_of(fx::kK1), 29);
    const ControlPolygon piece1 = subdivide_levels(scaled, 3).pieces[1];
    REQUIRE(monotone_axes(piece1).x);
    for (const Point3& p : hodograph(piece1).points) CHECK(p.x.sign() > 0);

    ControlPolygon point;
    point.points = {pt(1, 2, 3)};
    CHECK_THROWS_AS(hodograph(point), input_error);
}

TEST_CASE("monotone_axes: table annotations and basics") {
    const ControlPolygon scaled = scaled_by_pow2(polygon_of(fx::kK1), 29);
    const SubdivisionForest forest = subdivide_levels(scaled, 3);
    const std::vector<AxisSet> expected{
        {false, true, true},  // K[1,3,0]: Y, Z
        {true, false, false}, // K[1,3,1]: X
        {false, true, true},  // K[1,3,2]: Y, Z
        {true, false, true},  // K[1,3,3]: X, Z
        {true, true, false},  // K[1,3,4]: X, Y
        {false, true, true},  // K[1,3,5]: Y, Z
        {true, false, false}, // K[1,3,6]: X
        {false, true, true},  // K[1,3,7] (unannotated in the source data)
    };
    for (int k = 0; k < 8; ++k) CHECK(monotone_axes(forest.pieces[k]) == expected[k]);

    const ControlPolygon flat({pt(0, 0, 0), pt(0, 1, 2), pt(0, 2, 1)});
    CHECK_FALSE(monotone_axes(flat).x);
    CHECK(monotone_axes(flat).y);
}

TEST_CASE("reparameterization: halves trace the same curve") {
    testutil::Rng rng(23);
    const ControlPolygon k0 = polygon_of(fx::kK0);
    const auto [left, right] = decasteljau_split(k0, kHalf);
    for (int i = 0; i < 25; ++i) {
        const Rational t = rng.unit_rational(40) / Rational(2); // t in [0, 1/2]
        CHECK(evaluate(k0, t) == evaluate(left, Rational(2) * t));
        const Rational u = kHalf + t;
        CHECK(evaluate(k0, u) == evaluate(right, Rational(2) * u - Rational(1)));
    }
}

TEST_CASE("scaling equivariance of evaluation") {
    testutil::Rng rng(29);
    const ControlPolygon k1 = polygon_of(fx::kK1);
    const Rational scale(Int(3), Int(7));
    std::vector<Point3> pts;
    for (const Point3& p : k1.points) pts.push_back(scale * p);
    const ControlPolygon scaled((pts));
    for (int i = 0; i < 20; ++i) {
        const Rational t = rng.unit_rational(50);
        CHECK(evaluate(scaled, t) == scale * evaluate(k1, t));
    }
}

TEST_CASE("monotone transfer: curve samples follow a monotone axis") {
    const ControlPolygon scaled = scaled_by_pow2(polygon_of(fx::kK1), 29);
    const ControlPolygon piece = subdivide_levels(scaled, 3).pieces[1]; // monotone in X
    testutil::Rng rng(31);
    std::vector<Rational> ts;
    for (int i = 0; i < 12; ++i) ts.push_back(rng.unit_rational(97));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (size_t i = 0; i + 1 < ts.size(); ++i)
        CHECK(evaluate(piece, ts[i]).x < evaluate(piece, ts[i + 1]).x);
}
