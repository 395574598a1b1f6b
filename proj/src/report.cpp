#include "knotcert/report.hpp"

#include <algorithm>
#include <sstream>

#include "knotcert/errors.hpp"
#include "knotcert/predicates.hpp"

namespace knotcert {

namespace {

const char* verdict_tag(SeparationResult::Verdict v) {
    switch (v) {
        case SeparationResult::Verdict::separated: return "separated";
        case SeparationResult::Verdict::shared_points_only: return "shared-points-only";
        default: return "overlapping";
    }
}

SeparationResult::Verdict parse_verdict(const std::string& tag) {
    if (tag == "separated") return SeparationResult::Verdict::separated;
    if (tag == "shared-points-only") return SeparationResult::Verdict::shared_points_only;
    if (tag == "overlapping") return SeparationResult::Verdict::overlapping;
    throw input_error("unknown verdict tag '" + tag + "'");
}

std::string point_str(const Point3& p) { return p.x.str() + " " + p.y.str() + " " + p.z.str(); }
std::string plane_str(const Plane& pi) { return pi.a.str() + " " + pi.b.str() + " " + pi.c.str() + " " + pi.d.str(); }

std::string points_str(const std::vector<Point3>& pts) {
    std::string out = std::to_string(pts.size());
    for (const Point3& p : pts) out += " : " + point_str(p);
    return out;
}

std::vector<Point3> sorted_points(std::vector<Point3> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point3& a, const Point3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    });
    return pts;
}

const char* axis_tag(Axis drop) {
    switch (drop) {
        case Axis::Z: return "xy";
        case Axis::X: return "yz";
        default: return "xz";
    }
}

Axis parse_axis_tag(const std::string& tag) {
    if (tag == "xy") return Axis::Z;
    if (tag == "yz") return Axis::X;
    if (tag == "xz") return Axis::Y;
    throw input_error("unknown projection tag '" + tag + "'");
}

std::string class_tag(const KnotClass& c) {
    switch (c.kind) {
        case KnotClass::Kind::unknot: return "Unknot";
        case KnotClass::Kind::trefoil_left: return "Trefoil(left)";
        case KnotClass::Kind::trefoil_right: return "Trefoil(right)";
        default: return "Other";
    }
}

std::string jones_terms(const LaurentPoly& p) {
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += " ";
        out += std::to_string(e) + ":" + c.get_str();
    }
    return out.empty() ? "-" : out;
}

struct Lexer {
    std::istringstream in;
    explicit Lexer(const std::string& text) : in(text) {}

    std::string next() {
        std::string t;
        if (!(in >> t)) throw input_error("certificate report truncated");
        return t;
    }
    void expect(const std::string& want) {
        const std::string got = next();
        if (got != want) throw input_error("certificate report: expected '" + want + "', got '" + got + "'");
    }
    int integer() { return std::stoi(next()); }
    Rational rational() { return Rational::parse(next()); }
    Point3 point() {
        Rational x = rational(), y = rational(), z = rational();
        return {std::move(x), std::move(y), std::move(z)};
    }
    Plane plane() {
        Rational a = rational(), b = rational(), c = rational(), d = rational();
        return Plane(std::move(a), std::move(b), std::move(c), std::move(d));
    }
    std::vector<Point3> points() {
        const int n = integer();
        std::vector<Point3> out;
        for (int i = 0; i < n; ++i) {
            expect(":");
            out.push_back(point());
        }
        return out;
    }
};

SeparationResult parse_separation_body(Lexer& lx) {
    SeparationResult r;
    lx.expect("verdict");
    r.verdict = parse_verdict(lx.next());
    if (r.verdict == SeparationResult::Verdict::overlapping) {
        lx.expect("at");
        r.overlap_at = lx.point();
        r.witness = Plane(Rational(1), Rational(0), Rational(0), Rational(0));
    } else {
        lx.expect("witness");
        r.witness = lx.plane();
        lx.expect("shared");
        r.shared = lx.points();
    }
    return r;
}

std::string separation_body(const SeparationResult& r) {
    std::string out = std::string("verdict ") + verdict_tag(r.verdict);
    if (r.verdict == SeparationResult::Verdict::overlapping)
        out += " at " + point_str(*r.overlap_at);
    else
        out += " witness " + plane_str(r.witness) + " shared " + points_str(r.shared);
    return out;
}

LaurentPoly parse_jones_terms(Lexer& lx, int count) {
    LaurentPoly p;
    for (int i = 0; i < count; ++i) {
        const std::string t = lx.next();
        const size_t colon = t.find(':');
        if (colon == std::string::npos) throw input_error("bad jones term '" + t + "'");
        p.add_term(std::stoi(t.substr(0, colon)), Int(t.substr(colon + 1), 10));
    }
    return p;
}

} // namespace

std::string serialize_certificate(const IsotopyCertificate& cert) {
    std::ostringstream out;
    out << "knotcert certificate v1\n";
    out << "kind isotopy\n";
    out << "level " << cert.level << "\n";
    out << "pieces " << cert.pieces.size() << "\n";
    for (const PieceCertificate& pc : cert.pieces) {
        out << "piece " << pc.index << " axis " << axis_name(pc.monotone_axis)
            << " axes " << pc.axes.str() << " hull-vertices "
            << points_str(sorted_points(pc.hull.vertices)) << "\n";
    }
    out << "separations " << cert.separations.size() << "\n";
    for (const PairSeparation& ps : cert.separations) {
        out << "separation " << ps.i << " " << ps.j << " allowed " << points_str(ps.allowed)
            << " " << separation_body(ps.result) << "\n";
    }
    out << "enclosures " << cert.enclosures.size() << "\n";
    for (const EnclosureRepair& er : cert.enclosures) {
        out << "enclosure piece " << er.piece << " pair " << er.offending.first << " " << er.offending.second
            << " swapped " << (er.enclosure.normals_swapped ? 1 : 0) << "\n";
        out << "plane-l " << plane_str(er.enclosure.left_half) << "\n";
        out << "plane-r " << plane_str(er.enclosure.right_half) << "\n";
        out << "mid " << point_str(er.enclosure.mid) << "\n";
        out << "counts " << er.evidence.plane_polyline_count_l << " " << er.evidence.plane_polyline_count_r << "\n";
        out << "samples " << er.evidence.samples.size();
        for (const auto& [t, inside] : er.evidence.samples)
            out << " : " << t.str() << " " << (inside ? 1 : 0);
        out << "\n";
        out << "against " << er.against.size() << "\n";
        for (const auto& [m, sep] : er.against) {
            out << "vs " << m << " part-l " << separation_body(sep.left)
                << " part-r " << separation_body(sep.right) << "\n";
        }
    }
    out << "refinement " << points_str(cert.refinement) << "\n";
    out << "diagram-axis " << axis_tag(cert.diagram_axis) << "\n";
    out << "crossings " << cert.diagram.crossings.size() << "\n";
    for (size_t i = 0; i < cert.diagram.crossings.size(); ++i) {
        const Crossing& c = cert.diagram.crossings[i];
        out << "crossing " << i << " over-edge " << c.over_edge << " under-edge " << c.under_edge
            << " at " << c.at.u.str() << " " << c.at.v.str()
            << " over-param " << c.over_param.str() << " under-param " << c.under_param.str()
            << " over-depth " << c.over_depth.str() << " under-depth " << c.under_depth.str()
            << " sign " << c.sign << "\n";
    }
    out << "class " << class_tag(cert.pl_knot_class) << "\n";
    out << "jones " << cert.pl_knot_class.jones.terms().size() << " " << jones_terms(cert.pl_knot_class.jones) << "\n";
    out << "end\n";
    return out.str();
}

IsotopyCertificate parse_certificate(const std::string& text) {
    Lexer lx(text);
    lx.expect("knotcert");
    lx.expect("certificate");
    lx.expect("v1");
    lx.expect("kind");
    lx.expect("isotopy");
    IsotopyCertificate cert;
    lx.expect("level");
    cert.level = lx.integer();
    lx.expect("pieces");
    const int npieces = lx.integer();
    for (int i = 0; i < npieces; ++i) {
        lx.expect("piece");
        PieceCertificate pc;
        pc.index = lx.integer();
        lx.expect("axis");
        const std::string ax = lx.next();
        pc.monotone_axis = ax == "X" ? Axis::X : ax == "Y" ? Axis::Y : Axis::Z;
        lx.expect("axes");
        const std::string axes = lx.next();
        pc.axes.x = axes.find('X') != std::string::npos;
        pc.axes.y = axes.find('Y') != std::string::npos;
        pc.axes.z = axes.find('Z') != std::string::npos;
        lx.expect("hull-vertices");
        pc.hull = convex_hull(lx.points());
        cert.pieces.push_back(std::move(pc));
    }
    lx.expect("separations");
    const int nsep = lx.integer();
    for (int i = 0; i < nsep; ++i) {
        lx.expect("separation");
        PairSeparation ps;
        ps.i = lx.integer();
        ps.j = lx.integer();
        lx.expect("allowed");
        ps.allowed = lx.points();
        ps.result = parse_separation_body(lx);
        cert.separations.push_back(std::move(ps));
    }
    lx.expect("enclosures");
    const int nenc = lx.integer();
    for (int i = 0; i < nenc; ++i) {
        lx.expect("enclosure");
        lx.expect("piece");
        EnclosureRepair er;
        er.piece = lx.integer();
        lx.expect("pair");
        er.offending.first = lx.integer();
        er.offending.second = lx.integer();
        lx.expect("swapped");
        er.enclosure.normals_swapped = lx.integer() != 0;
        lx.expect("plane-l");
        er.enclosure.left_half = lx.plane();
        lx.expect("plane-r");
        er.enclosure.right_half = lx.plane();
        lx.expect("mid");
        er.enclosure.mid = lx.point();
        lx.expect("counts");
        er.evidence.plane_polyline_count_l = lx.integer();
        er.evidence.plane_polyline_count_r = lx.integer();
        lx.expect("samples");
        const int ns = lx.integer();
        for (int s = 0; s < ns; ++s) {
            lx.expect(":");
            Rational t = lx.rational();
            const bool inside = lx.integer() != 0;
            er.evidence.samples.emplace_back(std::move(t), inside);
        }
        er.evidence.control_points_inside = true;
        lx.expect("against");
        const int na = lx.integer();
        for (int a = 0; a < na; ++a) {
            lx.expect("vs");
            const int m = lx.integer();
            EnclosureSeparation es;
            lx.expect("part-l");
            es.left = parse_separation_body(lx);
            lx.expect("part-r");
            es.right = parse_separation_body(lx);
            using V = SeparationResult::Verdict;
            es.verdict = (es.left.verdict == V::overlapping || es.right.verdict == V::overlapping)
                             ? V::overlapping
                             : (es.left.shared.empty() && es.right.shared.empty() ? V::separated
                                                                                  : V::shared_points_only);
            for (const SeparationResult* r : {&es.left, &es.right})
                for (const Point3& p : r->shared)
                    if (std::find(es.shared.begin(), es.shared.end(), p) == es.shared.end())
                        es.shared.push_back(p);
            er.against.emplace_back(m, std::move(es));
        }
        cert.enclosures.push_back(std::move(er));
    }
    lx.expect("refinement");
    cert.refinement = lx.points();
    lx.expect("diagram-axis");
    cert.diagram_axis = parse_axis_tag(lx.next());
    lx.expect("crossings");
    const int ncr = lx.integer();
    cert.diagram.projection_axis = cert.diagram_axis;
    for (const Point3& p : cert.refinement)
        cert.diagram.projected_vertices.push_back(project_drop(p, cert.diagram_axis));
    for (int i = 0; i < ncr; ++i) {
        lx.expect("crossing");
        lx.integer();
        Crossing c;
        lx.expect("over-edge");
        c.over_edge = lx.integer();
        lx.expect("under-edge");
        c.under_edge = lx.integer();
        lx.expect("at");
        c.at.u = lx.rational();
        c.at.v = lx.rational();
        lx.expect("over-param");
        c.over_param = lx.rational();
        lx.expect("under-param");
        c.under_param = lx.rational();
        lx.expect("over-depth");
        c.over_depth = lx.rational();
        lx.expect("under-depth");
        c.under_depth = lx.rational();
        lx.expect("sign");
        c.sign = lx.integer();
        cert.diagram.crossings.push_back(std::move(c));
    }
    lx.expect("class");
    const std::string cls = lx.next();
    lx.expect("jones");
    const int nj = lx.integer();
    cert.pl_knot_class.jones = nj == 0 ? LaurentPoly() : LaurentPoly();
    if (nj > 0) {
        cert.pl_knot_class.jones = parse_jones_terms(lx, nj);
    } else {
        lx.expect("-");
    }
    if (cls == "Unknot")
        cert.pl_knot_class.kind = KnotClass::Kind::unknot;
    else if (cls == "Trefoil(left)")
        cert.pl_knot_class.kind = KnotClass::Kind::trefoil_left;
    else if (cls == "Trefoil(right)")
        cert.pl_knot_class.kind = KnotClass::Kind::trefoil_right;
    else
        cert.pl_knot_class.kind = KnotClass::Kind::other;
    lx.expect("end");
    return cert;
}

std::string serialize_push(const PushCertificate& cert) {
    std::ostringstream out;
    out << "knotcert certificate v1\n";
    out << "kind push\n";
    out << "vertex " << cert.vertex << "\n";
    out << "start " << point_str(cert.start) << "\n";
    out << "target " << point_str(cert.target) << "\n";
    out << "tri-prev " << point_str(cert.tri_prev[0]) << " ; " << point_str(cert.tri_prev[1]) << " ; "
        << point_str(cert.tri_prev[2]) << "\n";
    out << "tri-next " << point_str(cert.tri_next[0]) << " ; " << point_str(cert.tri_next[1]) << " ; "
        << point_str(cert.tri_next[2]) << "\n";
    out << "edges-checked " << cert.edges_checked << "\n";
    out << "end\n";
    return out.str();
}

PushCertificate parse_push(const std::string& text) {
    Lexer lx(text);
    lx.expect("knotcert");
    lx.expect("certificate");
    lx.expect("v1");
    lx.expect("kind");
    lx.expect("push");
    PushCertificate cert;
    lx.expect("vertex");
    cert.vertex = lx.integer();
    lx.expect("start");
    cert.start = lx.point();
    lx.expect("target");
    cert.target = lx.point();
    lx.expect("tri-prev");
    cert.tri_prev[0] = lx.point();
    lx.expect(";");
    cert.tri_prev[1] = lx.point();
    lx.expect(";");
    cert.tri_prev[2] = lx.point();
    lx.expect("tri-next");
    cert.tri_next[0] = lx.point();
    lx.expect(";");
    cert.tri_next[1] = lx.point();
    lx.expect(";");
    cert.tri_next[2] = lx.point();
    lx.expect("edges-checked");
    cert.edges_checked = lx.integer();
    lx.expect("end");
    return cert;
}

std::string serialize_transition(const TransitionInterval& t) {
    std::ostringstream out;
    out << "knotcert certificate v1\n";
    out << "kind transition\n";
    out << "lo " << t.lo.str() << "\n";
    out << "hi " << t.hi.str() << "\n";
    out << "width " << (t.hi - t.lo).str() << "\n";
    out << "class-lo " << class_tag(t.class_lo) << "\n";
    out << "class-hi " << class_tag(t.class_hi) << "\n";
    out << "uncertified-gap " << (t.uncertified_gap ? 1 : 0) << "\n";
    out << "midpoints " << t.midpoints_tried << "\n";
    out << "certificate-lo\n" << serialize_certificate(t.cert_lo);
    out << "certificate-hi\n" << serialize_certificate(t.cert_hi);
    out << "end\n";
    return out.str();
}

namespace {

std::string check_separation(const SeparationResult& r, const ConvexHull3& a, const ConvexHull3& b,
                             const std::vector<Point3>& allowed, const std::string& label) {
    using V = SeparationResult::Verdict;
    if (r.verdict == V::separated) {
        for (const Point3& p : a.vertices)
            if (r.witness.side(p) <= 0) return label + ": separated witness not strictly positive on A";
        for (const Point3& p : b.vertices)
            if (r.witness.side(p) >= 0) return label + ": separated witness not strictly negative on B";
        return "";
    }
    if (r.verdict == V::shared_points_only) {
        for (const Point3& p : a.vertices)
            if (r.witness.side(p) < 0) return label + ": shared witness negative on A";
        for (const Point3& p : b.vertices)
            if (r.witness.side(p) > 0) return label + ": shared witness positive on B";
        for (const Point3& p : r.shared) {
            if (r.witness.side(p) != 0) return label + ": shared point off the witness plane";
            if (std::find(allowed.begin(), allowed.end(), p) == allowed.end())
                return label + ": shared point is not an allowed shared point";
            if (!a.contains(p) || !b.contains(p)) return label + ": shared point not in both hulls";
        }
        return "";
    }
    if (!r.overlap_at) return label + ": overlapping without witness point";
    if (!a.contains(*r.overlap_at) || !b.contains(*r.overlap_at))
        return label + ": overlap witness not in both hulls";
    return "";
}

} // namespace

std::string revalidate_certificate(const ControlPolygon& cp, const IsotopyCertificate& cert) {
    SubdivisionForest forest = subdivide_levels(cp, cert.level);
    const int n = static_cast<int>(forest.pieces.size());
    if (static_cast<int>(cert.pieces.size()) != n) return "piece count mismatch";

    std::vector<ConvexHull3> hulls;
    for (int i = 0; i < n; ++i) {
        const AxisSet axes = monotone_axes(forest.pieces[i]);
        if (!(axes == cert.pieces[i].axes)) return "piece " + std::to_string(i) + ": monotone axes mismatch";
        if (!axes.contains(cert.pieces[i].monotone_axis))
            return "piece " + std::to_string(i) + ": certified axis not monotone";
        ConvexHull3 h = convex_hull(forest.pieces[i].points);
        auto same_set = [&](const std::vector<Point3>& a, const std::vector<Point3>& b) {
            if (a.size() != b.size()) return false;
            for (const Point3& p : a)
                if (std::find(b.begin(), b.end(), p) == b.end()) return false;
            return true;
        };
        if (!same_set(h.vertices, cert.pieces[i].hull.vertices))
            return "piece " + std::to_string(i) + ": hull vertex set mismatch";
        hulls.push_back(std::move(h));
    }

    std::vector<int> repaired;
    for (const EnclosureRepair& er : cert.enclosures) repaired.push_back(er.piece);

    if (static_cast<int>(cert.separations.size()) != n * (n - 1) / 2) return "separation matrix incomplete";
    for (const PairSeparation& ps : cert.separations) {
        const bool adjacent = (ps.j == ps.i + 1) || (ps.i == 0 && ps.j == n - 1);
        const std::string label = "pair (" + std::to_string(ps.i) + "," + std::to_string(ps.j) + ")";
        // recompute the legitimate shared endpoints; the recorded exemptions
        // must not be wider
        std::vector<Point3> allowed_true;
        if (ps.j == ps.i + 1) allowed_true.push_back(forest.pieces[ps.i].back());
        if (ps.i == 0 && ps.j == n - 1) allowed_true.push_back(forest.pieces[0].front());
        for (const Point3& p : ps.allowed)
            if (std::find(allowed_true.begin(), allowed_true.end(), p) == allowed_true.end())
                return label + ": recorded exemption is not a shared subdivision endpoint";
        std::string err = check_separation(ps.result, hulls[ps.i], hulls[ps.j], ps.allowed, label);
        if (!err.empty()) return err;
        if (ps.result.verdict == SeparationResult::Verdict::overlapping) {
            if (adjacent) return label + ": adjacent pair overlapping";
            const bool covered = std::any_of(repaired.begin(), repaired.end(), [&](int p) {
                return p == ps.i || p == ps.j;
            });
            if (!covered) return label + ": overlapping pair without enclosure repair";
        }
    }

    for (const EnclosureRepair& er : cert.enclosures) {
        const std::string label = "enclosure(piece " + std::to_string(er.piece) + ")";
        const ControlPolygon& piece = forest.pieces[er.piece];
        Enclosure e;
        e.hull = hulls[er.piece];
        e.left_half = er.enclosure.left_half;
        e.right_half = er.enclosure.right_half;
        e.mid = er.enclosure.mid;
        if (!(evaluate(piece, Rational(Int(1), Int(2))) == e.mid)) return label + ": mid is not the curve midpoint";
        if (e.left_half.side(e.mid) != 0 || e.right_half.side(e.mid) != 0)
            return label + ": a half-space plane misses the midpoint";
        if (e.left_half.side(piece.front()) != 0) return label + ": left plane misses the first control point";
        if (e.right_half.side(piece.back()) != 0) return label + ": right plane misses the last control point";
        for (const Point3& p : piece.points)
            if (!e.contains(p)) return label + ": control point escapes the enclosure";
        const auto hl = plane_polyline_intersections(e.left_half, piece.points);
        const auto hr = plane_polyline_intersections(e.right_half, piece.points);
        if (hl.count != er.evidence.plane_polyline_count_l || hl.count != 2)
            return label + ": left plane-polyline count mismatch";
        if (hr.count != er.evidence.plane_polyline_count_r || hr.count != 2)
            return label + ": right plane-polyline count mismatch";
        for (const auto& [t, inside] : er.evidence.samples) {
            if (!inside) return label + ": recorded sample outside enclosure";
            if (!e.contains(evaluate(piece, t))) return label + ": sample membership fails recheck";
        }
        for (const auto& [m, sep] : er.against) {
            if (sep.verdict == SeparationResult::Verdict::overlapping)
                return label + ": recorded overlap against piece " + std::to_string(m);
            const ConvexHull3 part_l = clip_hull(e.hull, e.left_half);
            const ConvexHull3 part_r = clip_hull(e.hull, e.right_half);
            const int lo = std::min(m, er.piece), hi = std::max(m, er.piece);
            std::vector<Point3> allowed;
            if (hi == lo + 1) allowed.push_back(forest.pieces[lo].back());
            if (lo == 0 && hi == n - 1) allowed.push_back(forest.pieces[0].front());
            std::string err = check_separation(sep.left, part_l, hulls[m], allowed, label + " part-l vs " + std::to_string(m));
            if (!err.empty()) return err;
            err = check_separation(sep.right, part_r, hulls[m], allowed, label + " part-r vs " + std::to_string(m));
            if (!err.empty()) return err;
        }
    }

    const std::vector<Point3> refinement = forest.refinement_vertices();
    if (!(refinement == cert.refinement)) return "refinement vertex list mismatch";
    const PLKnot knot(refinement);
    if (!is_simple(knot).simple()) return "refinement is not simple";
    KnotDiagram d;
    try {
        d = project_diagram(knot, cert.diagram_axis);
    } catch (const degenerate_projection& e) {
        return std::string("recorded projection is irregular: ") + e.what();
    }
    if (d.crossings.size() != cert.diagram.crossings.size()) return "crossing count mismatch";
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing &a = d.crossings[i], &b = cert.diagram.crossings[i];
        if (!(a.at == b.at) || a.over_edge != b.over_edge || a.under_edge != b.under_edge ||
            a.over_depth != b.over_depth || a.under_depth != b.under_depth || a.sign != b.sign)
            return "crossing " + std::to_string(i) + " mismatch";
    }
    const KnotClass cls = classify(d);
    if (!(cls.kind == cert.pl_knot_class.kind) || !(cls.jones == cert.pl_knot_class.jones))
        return "knot class mismatch";
    return "";
}

std::string revalidate_push(const ControlPolygon& cp, const PushCertificate& cert) {
    try {
        const PushCertificate again = certify_push(cp, cert.vertex, cert.target);
        if (!(again.start == cert.start)) return "start vertex mismatch";
        if (again.edges_checked != cert.edges_checked) return "edge count mismatch";
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

} // namespace knotcert
