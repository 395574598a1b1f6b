#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "knotcert/certify.hpp"
#include "knotcert/polygon_io.hpp"
#include "knotcert/report.hpp"
#include "knotcert/svg.hpp"
#include "test_util.hpp"

using namespace knotcert;
using namespace knotcert::testutil;
namespace fx = knotcert::fixtures;

namespace {

// whitespace-insensitive data tokens: braces, commas and number literals;
// Mathematica comments and header lines without braces are dropped
std::vector<std::string> data_tokens(const std::string& text) {
    std::string cleaned;
    size_t i = 0;
    while (i < text.size()) {
        if (i + 1 < text.size() && text[i] == '(' && text[i + 1] == '*') {
            const size_t end = text.find("*)", i + 2);
            i = (end == std::string::npos) ? text.size() : end + 2;
            continue;
        }
        cleaned += text[i++];
    }
    std::vector<std::string> tokens;
    std::istringstream in(cleaned);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find('{') == std::string::npos && line.find('}') == std::string::npos) continue;
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        };
        for (char c : line) {
            if (c == '{' || c == '}' || c == ',') {
                flush();
                tokens.push_back(std::string(1, c));
            } else if (c == ' ' || c == '\t') {
                flush();
            } else {
                cur += c;
            }
        }
        flush();
    }
    return tokens;
}

std::string table_text(const std::vector<std::vector<std::array<long long, 3>>>& pieces) {
    std::string out;
    for (const auto& piece : pieces) {
        for (size_t i = 0; i < piece.size(); ++i) {
            out += "{ " + std::to_string(piece[i][0]) + ", " + std::to_string(piece[i][1]) + "," +
                   std::to_string(piece[i][2]) + " }";
            if (i + 1 < piece.size()) out += ",";
            out += "\n";
        }
        out += "\n";
    }
    return out;
}

} // namespace

TEST_CASE("polygon files: whitespace format round trip") {
    const ControlPolygon k1 = polygon_of(fx::kK1);
    const std::string text = serialize_polygon_ws(k1);
    const ControlPolygon back = parse_polygon(text);
    CHECK(back.points == k1.points);
    CHECK(serialize_polygon_ws(back) == text); // byte-identical re-serialization

    const ControlPolygon rational_cp({pt(0, 0, 0), {Rational(Int(1), Int(3)), Rational(Int(-7), Int(2)), Rational(4)},
                                      pt(1, 1, 1)});
    CHECK(parse_polygon(serialize_polygon_ws(rational_cp)).points == rational_cp.points);
}

TEST_CASE("polygon files: brace format round trip and comment handling") {
    const ControlPolygon k0 = polygon_of(fx::kK0);
    CHECK(parse_polygon(serialize_polygon_braces(k0)).points == k0.points);

    const std::string annotated =
        "(* header comment *)\n$K[1,3,0]$: Y, Z\n{ 1, 2, 3 },\n{ 4, 5/2, -6 }\n";
    const ControlPolygon cp = parse_polygon(annotated);
    REQUIRE(cp.points.size() == 2);
    CHECK(cp.points[1] == Point3{Rational(4), Rational(Int(5), Int(2)), Rational(-6)});
}

TEST_CASE("polygon files: malformed input is rejected") {
    CHECK_THROWS_AS(parse_polygon(""), input_error);
    CHECK_THROWS_AS(parse_polygon("1 2\n"), input_error);
    CHECK_THROWS_AS(parse_polygon("{1, 2}\n"), input_error);
    CHECK_THROWS_AS(parse_polygon("a b c\n"), input_error);
    CHECK_THROWS_AS(parse_polygon("1 2 3\n1 2 3\n"), input_error); // repeated consecutive point
}

TEST_CASE("forest_table: levels 1-3 of the scaled perturbed curve match the reference tables") {
    const ControlPolygon scaled = scaled_by_pow2(polygon_of(fx::kK1), 29);
    CHECK(data_tokens(forest_table(subdivide_levels(scaled, 1))) == data_tokens(table_text(fx::kTableIVLevel1)));
    CHECK(data_tokens(forest_table(subdivide_levels(scaled, 2))) == data_tokens(table_text(fx::kTableIVLevel2)));
    CHECK(data_tokens(forest_table(subdivide_levels(scaled, 3))) == data_tokens(table_text(fx::kTableIIILevel3)));
}

TEST_CASE("forest_flat_polygon: parses back to the refinement knot") {
    const SubdivisionForest forest = subdivide_levels(polygon_of(fx::kK0), 2);
    const ControlPolygon flat = parse_polygon(forest_flat_polygon(forest));
    CHECK(flat.closed);
    CHECK(flat.points.size() == forest.refinement_vertices().size() + 1);
}

TEST_CASE("certificate report: serialize, parse, revalidate") {
    const ControlPolygon k1 = polygon_of(fx::kK1);
    const IsotopyCertificate cert = certify_isotopy(k1, 3);
    const std::string text = serialize_certificate(cert);
    CHECK(serialize_certificate(cert) == text); // deterministic
    const IsotopyCertificate parsed = parse_certificate(text);
    CHECK(parsed.level == cert.level);
    CHECK(parsed.pieces.size() == cert.pieces.size());
    CHECK(parsed.enclosures.size() == 1);
    CHECK(parsed.pl_knot_class.kind == cert.pl_knot_class.kind);
    CHECK(parsed.pl_knot_class.jones == cert.pl_knot_class.jones);
    CHECK(revalidate_certificate(k1, parsed) == "");
    CHECK(serialize_certificate(parsed) == text);
}

TEST_CASE("push report: serialize, parse, revalidate") {
    const ControlPolygon k0 = polygon_of(fx::kK0);
    const PushCertificate cert = certify_push(k0, 3, pt(10, -60, 58));
    const std::string text = serialize_push(cert);
    const PushCertificate parsed = parse_push(text);
    CHECK(parsed.vertex == cert.vertex);
    CHECK(parsed.start == cert.start);
    CHECK(parsed.target == cert.target);
    CHECK(revalidate_push(k0, parsed) == "");
    CHECK(serialize_push(parsed) == text);
}

TEST_CASE("decimal_str: exact decimal emission") {
    CHECK(decimal_str(Rational(Int(1), Int(4)), 30) == "0.25");
    CHECK(decimal_str(Rational(-3), 30) == "-3");
    CHECK(decimal_str(Rational(Int(1), Int(3)), 8) == "0.33333333");
    CHECK(decimal_str(Rational(Int(10), Int(3)), 4) == "3.333");
    CHECK(decimal_str(Rational(0), 30) == "0");
}

TEST_CASE("render_svg: square has no breaks, fixture diagrams break three times") {
    const PLKnot square({pt(0, 0, 3), pt(4, 0, 2), pt(4, 4, 3), pt(0, 4, 2)});
    const std::string svg = render_svg(project_diagram(square, Axis::Z));
    CHECK(svg.find("under-break") == std::string::npos);
    CHECK(svg.find("<circle") == std::string::npos);

    auto count = [](const std::string& text, const std::string& needle) {
        int n = 0;
        for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
        return n;
    };

    for (const auto& data : {fx::kK0, fx::kK1}) {
        const ControlPolygon scaled = scaled_by_pow2(polygon_of(data), 29);
        const PLKnot k(subdivide_levels(scaled, 4).subdivision_point_vertices());
        const std::string s = render_svg(project_diagram(k, Axis::Z));
        CHECK(count(s, "under-break") == 3);
        CHECK(count(s, "<circle") == 3);
        // deterministic output
        CHECK(render_svg(project_diagram(k, Axis::Z)) == s);
    }
}
