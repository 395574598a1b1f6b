#include "knotcert/bezier.hpp"

#include "knotcert/errors.hpp"

namespace knotcert {

ControlPolygon::ControlPolygon(std::vector<Point3> pts) : points(std::move(pts)) {
    if (points.size() < 2) throw input_error("control polygon needs at least 2 points");
    for (size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i] == points[i + 1])
            throw input_error("control polygon has equal consecutive points at index " + std::to_string(i));
    closed = points.front() == points.back();
}

std::string AxisSet::str() const {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    add(x, "X");
    add(y, "Y");
    add(z, "Z");
    return out;
}

Point3 evaluate(const ControlPolygon& cp, const Rational& t) {
    if (t.sign() < 0 || t > Rational(1)) throw input_error("evaluate: parameter outside [0,1]");
    std::vector<Point3> row = cp.points;
    const Rational s = Rational(1) - t;
    while (row.size() > 1) {
        for (size_t i = 0; i + 1 < row.size(); ++i)
            row[i] = s * row[i] + t * row[i + 1];
        row.pop_back();
    }
    return row.front();
}

std::pair<ControlPolygon, ControlPolygon> decasteljau_split(const ControlPolygon& cp, const Rational& t) {
    if (t.sign() <= 0 || t >= Rational(1)) throw input_error("decasteljau_split: parameter outside (0,1)");
    const size_t n = cp.points.size();
    std::vector<Point3> left, right;
    left.reserve(n);
    right.reserve(n);
    std::vector<Point3> row = cp.points;
    const Rational s = Rational(1) - t;
    left.push_back(row.front());
    right.push_back(row.back());
    while (row.size() > 1) {
        for (size_t i = 0; i + 1 < row.size(); ++i)
            row[i] = s * row[i] + t * row[i + 1];
        row.pop_back();
        left.push_back(row.front());
        right.push_back(row.back());
    }
    std::reverse(right.begin(), right.end());
    return {ControlPolygon(std::move(left)), ControlPolygon(std::move(right))};
}

SubdivisionForest subdivide_levels(const ControlPolygon& cp, int level) {
    if (level < 0) throw input_error("subdivide_levels: negative level");
    SubdivisionForest forest;
    forest.level = level;
    forest.pieces = {cp};
    const Rational half(Int(1), Int(2));
    for (int l = 0; l < level; ++l) {
        std::vector<ControlPolygon> next;
        next.reserve(forest.pieces.size() * 2);
        for (const ControlPolygon& piece : forest.pieces) {
            auto [a, b] = decasteljau_split(piece, half);
            next.push_back(std::move(a));
            next.push_back(std::move(b));
        }
        forest.pieces = std::move(next);
    }
    return forest;
}

std::vector<Point3> SubdivisionForest::refinement_vertices() const {
    std::vector<Point3> out;
    for (const ControlPolygon& piece : pieces)
        for (size_t i = 0; i + 1 < piece.points.size(); ++i)
            out.push_back(piece.points[i]);
    // open input: keep the final endpoint; closed input: the wrap duplicate is
    // the first vertex again and stays dropped
    if (!pieces.empty() && !(pieces.back().back() == pieces.front().front()))
        out.push_back(pieces.back().back());
    return out;
}

std::vector<Point3> SubdivisionForest::subdivision_point_vertices() const {
    std::vector<Point3> out;
    out.reserve(pieces.size());
    for (const ControlPolygon& piece : pieces)
        out.push_back(piece.front());
    if (!pieces.empty() && !(pieces.back().back() == pieces.front().front()))
        out.push_back(pieces.back().back());
    return out;
}

ScaledPolygon scale_for_subdivision(const ControlPolygon& cp, int level) {
    if (level < 0) throw input_error("scale_for_subdivision: negative level");
    for (const Point3& p : cp.points)
        if (!p.x.is_integer() || !p.y.is_integer() || !p.z.is_integer())
            throw input_error("scale_for_subdivision: non-integer input coordinate " + p.str());
    const int m = level * (cp.degree() + 1) + 1;
    const Rational f = Rational::pow2(static_cast<unsigned>(m));
    std::vector<Point3> pts;
    pts.reserve(cp.points.size());
    for (const Point3& p : cp.points) pts.push_back(f * p);
    return {ControlPolygon(std::move(pts)), m};
}

ControlPolygon hodograph(const ControlPolygon& cp) {
    if (cp.degree() < 1) throw input_error("hodograph: degree must be at least 1");
    const Rational n(cp.degree());
    std::vector<Point3> pts;
    pts.reserve(cp.points.size() - 1);
    for (size_t i = 0; i + 1 < cp.points.size(); ++i)
        pts.push_back(n * (cp.points[i + 1] - cp.points[i]));
    if (pts.size() == 1) {
        // degree-0 result is a single point; bypass the 2-point constructor
        ControlPolygon out;
        out.points = std::move(pts);
        out.closed = false;
        return out;
    }
    ControlPolygon out;
    out.points = std::move(pts); // hodograph may repeat points; no distinctness demand
    out.closed = false;
    return out;
}

AxisSet monotone_axes(const ControlPolygon& cp) {
    AxisSet set;
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        bool inc = true, dec = true;
        for (size_t i = 0; i + 1 < cp.points.size(); ++i) {
            const auto c = cp.points[i].coord(a) <=> cp.points[i + 1].coord(a);
            if (c >= 0) inc = false;
            if (c <= 0) dec = false;
        }
        const bool mono = inc || dec;
        if (a == Axis::X) set.x = mono;
        if (a == Axis::Y) set.y = mono;
        if (a == Axis::Z) set.z = mono;
    }
    return set;
}

} // namespace knotcert
