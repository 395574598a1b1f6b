#include "knotcert/polygon_io.hpp"

#include <sstream>

#include "knotcert/errors.hpp"

namespace knotcert {

namespace {

std::string strip_mathematica_comments(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        if (i + 1 < text.size() && text[i] == '(' && text[i + 1] == '*') {
            const size_t end = text.find("*)", i + 2);
            if (end == std::string_view::npos) throw input_error("unterminated (* comment");
            i = end + 2;
            continue;
        }
        out += text[i++];
    }
    return out;
}

ControlPolygon parse_braces(std::string_view raw) {
    const std::string text = strip_mathematica_comments(raw);
    std::vector<Point3> pts;
    size_t i = 0;
    while (true) {
        const size_t open = text.find('{', i);
        if (open == std::string::npos) break;
        const size_t close = text.find('}', open);
        if (close == std::string::npos) throw input_error("unbalanced '{' in polygon file");
        std::string inner = text.substr(open + 1, close - open - 1);
        for (char& ch : inner)
            if (ch == ',') ch = ' ';
        std::istringstream in(inner);
        std::string xs, ys, zs, extra;
        if (!(in >> xs >> ys >> zs) || (in >> extra))
            throw input_error("brace record is not a coordinate triple: {" + inner + "}");
        pts.push_back({Rational::parse(xs), Rational::parse(ys), Rational::parse(zs)});
        i = close + 1;
    }
    if (pts.empty()) throw input_error("no points in polygon file");
    return ControlPolygon(std::move(pts));
}

ControlPolygon parse_ws(std::string_view text) {
    std::vector<Point3> pts;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string xs, ys, zs, extra;
        if (!(ls >> xs)) continue; // blank
        if (!(ls >> ys >> zs) || (ls >> extra))
            throw input_error("line is not a coordinate triple: '" + line + "'");
        pts.push_back({Rational::parse(xs), Rational::parse(ys), Rational::parse(zs)});
    }
    if (pts.empty()) throw input_error("no points in polygon file");
    return ControlPolygon(std::move(pts));
}

} // namespace

ControlPolygon parse_polygon(std::string_view text) {
    const size_t brace = text.find('{');
    if (brace != std::string_view::npos) return parse_braces(text);
    return parse_ws(text);
}

std::string serialize_polygon_ws(const ControlPolygon& cp) {
    std::string out;
    for (const Point3& p : cp.points)
        out += p.x.str() + " " + p.y.str() + " " + p.z.str() + "\n";
    return out;
}

std::string serialize_polygon_braces(const ControlPolygon& cp) {
    std::string out;
    for (size_t i = 0; i < cp.points.size(); ++i) {
        const Point3& p = cp.points[i];
        out += "{ " + p.x.str() + ", " + p.y.str() + ", " + p.z.str() + " }";
        if (i + 1 < cp.points.size()) out += ",";
        out += "\n";
    }
    return out;
}

std::string forest_table(const SubdivisionForest& forest) {
    std::string out = "(*Subdivision " + std::to_string(forest.level) + " *)\n";
    for (size_t k = 0; k < forest.pieces.size(); ++k) {
        if (k) out += "\n";
        out += serialize_polygon_braces(forest.pieces[k]);
    }
    return out;
}

std::string forest_flat_polygon(const SubdivisionForest& forest) {
    std::vector<Point3> verts = forest.refinement_vertices();
    const bool closed = forest.pieces.back().back() == forest.pieces.front().front();
    if (closed) verts.push_back(verts.front()); // closed polygon file duplicates the endpoint
    std::string out;
    for (const Point3& p : verts)
        out += p.x.str() + " " + p.y.str() + " " + p.z.str() + "\n";
    return out;
}

} // namespace knotcert
