#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "knotcert/errors.hpp"
#include "knotcert/polygon_io.hpp"
#include "knotcert/report.hpp"
#include "knotcert/svg.hpp"

namespace kc = knotcert;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kc::input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw kc::input_error("cannot write '" + path + "'");
    out << text;
}

kc::Point3 parse_triple(const std::string& text) {
    std::string s = text;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream in(s);
    std::string xs, ys, zs, extra;
    if (!(in >> xs >> ys >> zs) || (in >> extra))
        throw kc::input_error("expected a comma-separated coordinate triple, got '" + text + "'");
    return {kc::Rational::parse(xs), kc::Rational::parse(ys), kc::Rational::parse(zs)};
}

kc::Axis parse_axis_flag(const std::string& axis) {
    if (axis == "xy") return kc::Axis::Z;
    if (axis == "yz") return kc::Axis::X;
    if (axis == "xz") return kc::Axis::Y;
    throw kc::input_error("--axis must be xy, yz or xz");
}

std::string diagram_report(const kc::KnotDiagram& d) {
    std::ostringstream out;
    const char* tag = d.projection_axis == kc::Axis::Z ? "xy" : d.projection_axis == kc::Axis::X ? "yz" : "xz";
    out << "projection " << tag << "\n";
    out << "crossings " << d.crossings.size() << "\n";
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const kc::Crossing& c = d.crossings[i];
        out << "crossing " << i << " at " << c.at.u.str() << " " << c.at.v.str() << " over-edge " << c.over_edge
            << " under-edge " << c.under_edge << " over-depth " << c.over_depth.str() << " under-depth "
            << c.under_depth.str() << " sign " << c.sign << "\n";
    }
    return out.str();
}

kc::ControlPolygon load_polygon(const std::string& path) { return kc::parse_polygon(read_file(path)); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bézier knot certification"};
    app.require_subcommand(1);

    // subdivide
    auto* sub = app.add_subcommand("subdivide", "de Casteljau subdivision table");
    std::string sub_in, sub_scale = "auto", sub_out;
    int sub_levels = 1;
    bool sub_flatten = false;
    sub->add_option("input", sub_in)->required();
    sub->add_option("--levels", sub_levels)->required();
    sub->add_option("--scale", sub_scale, "auto | none | 2^m");
    sub->add_flag("--flatten", sub_flatten, "emit the refinement as one closed polygon");
    sub->add_option("-o,--output", sub_out);

    // certify
    auto* cert = app.add_subcommand("certify", "isotopy certificate at a subdivision level");
    std::string cert_in, cert_out;
    int cert_level = kc::kDefaultMaxLevel;
    bool cert_grid = false;
    cert->add_option("input", cert_in)->required();
    cert->add_option("--max-level", cert_level);
    cert->add_flag("--normal-grid", cert_grid, "search a grid of enclosure normals, not just the canonical ones");
    cert->add_option("-o,--output", cert_out);

    // diagram
    auto* diag = app.add_subcommand("diagram", "exact crossing list of a projection");
    std::string diag_in, diag_axis = "xy", diag_svg, diag_out;
    diag->add_option("input", diag_in)->required();
    diag->add_option("--axis", diag_axis, "xy | yz | xz");
    diag->add_option("--svg", diag_svg, "also write an SVG rendering");
    diag->add_option("-o,--output", diag_out);

    // classify
    auto* cls = app.add_subcommand("classify", "knot class of the Bézier curve");
    std::string cls_in;
    int cls_level = kc::kDefaultMaxLevel;
    cls->add_option("input", cls_in)->required();
    cls->add_option("--max-level", cls_level);

    // push
    auto* push = app.add_subcommand("push", "certify a one-vertex move");
    std::string push_in, push_to, push_out;
    int push_vertex = -1;
    push->add_option("input", push_in)->required();
    push->add_option("--vertex", push_vertex)->required();
    push->add_option("--to", push_to)->required();
    push->add_option("-o,--output", push_out);

    // bisect
    auto* bis = app.add_subcommand("bisect", "bracket the knot-type transition of a one-vertex family");
    std::string bis_in0, bis_in1, bis_tol = "1/1024", bis_out;
    int bis_level = kc::kDefaultMaxLevel;
    bis->add_option("input0", bis_in0)->required();
    bis->add_option("input1", bis_in1)->required();
    bis->add_option("--tol", bis_tol);
    bis->add_option("--max-level", bis_level);
    bis->add_option("-o,--output", bis_out);

    // enclosure
    auto* enc = app.add_subcommand("enclosure", "aggressive enclosure evidence for one piece");
    std::string enc_in, enc_nl, enc_nr, enc_out;
    int enc_piece = 0, enc_level = 3;
    enc->add_option("input", enc_in)->required();
    enc->add_option("--piece", enc_piece)->required();
    enc->add_option("--level", enc_level);
    enc->add_option("--normal-l", enc_nl, "a,b,c (default: canonical zero-Z normal)");
    enc->add_option("--normal-r", enc_nr);
    enc->add_option("-o,--output", enc_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sub) {
            kc::ControlPolygon cp = load_polygon(sub_in);
            kc::Rational scale(1);
            int m = 0;
            if (sub_scale == "auto") {
                auto scaled = kc::scale_for_subdivision(cp, sub_levels);
                cp = std::move(scaled.polygon);
                m = scaled.m;
                scale = kc::Rational::pow2(static_cast<unsigned>(m));
            } else if (sub_scale.rfind("2^", 0) == 0) {
                m = std::stoi(sub_scale.substr(2));
                if (m < 0) throw kc::input_error("--scale exponent must be non-negative");
                scale = kc::Rational::pow2(static_cast<unsigned>(m));
                std::vector<kc::Point3> pts;
                for (const kc::Point3& p : cp.points) pts.push_back(scale * p);
                cp = kc::ControlPolygon(std::move(pts));
            } else if (sub_scale != "none") {
                throw kc::input_error("--scale must be auto, none or 2^m");
            }
            kc::SubdivisionForest forest = kc::subdivide_levels(cp, sub_levels);
            forest.scale = scale;
            write_output(sub_out, sub_flatten ? kc::forest_flat_polygon(forest) : kc::forest_table(forest));
            return 0;
        }
        if (*cert) {
            kc::ControlPolygon cp = load_polygon(cert_in);
            try {
                kc::CertifyOptions opts;
                opts.normal_grid_search = cert_grid;
                kc::IsotopyCertificate c = kc::certify_isotopy(cp, cert_level, opts);
                write_output(cert_out, kc::serialize_certificate(c));
                return 0;
            } catch (const kc::certification_failure& e) {
                std::cerr << "certification failed: " << e.what() << "\n";
                return 2;
            }
        }
        if (*diag) {
            kc::ControlPolygon cp = load_polygon(diag_in);
            kc::KnotDiagram d = kc::project_diagram(kc::PLKnot::from_closed_polygon(cp), parse_axis_flag(diag_axis));
            if (!diag_svg.empty()) write_output(diag_svg, kc::render_svg(d));
            write_output(diag_out, diagram_report(d));
            return 0;
        }
        if (*cls) {
            kc::ControlPolygon cp = load_polygon(cls_in);
            try {
                auto [klass, certificate] = kc::bezier_knot_type(cp, cls_level);
                std::cout << klass.name() << "\n";
                std::cout << "jones " << klass.jones.str() << "\n";
                std::cout << "certified-level " << certificate.level << "\n";
                return 0;
            } catch (const kc::certification_failure& e) {
                std::cerr << "certification failed: " << e.what() << "\n";
                return 2;
            }
        }
        if (*push) {
            kc::ControlPolygon cp = load_polygon(push_in);
            try {
                kc::PushCertificate c = kc::certify_push(cp, push_vertex, parse_triple(push_to));
                write_output(push_out, kc::serialize_push(c));
                return 0;
            } catch (const kc::certification_failure& e) {
                std::cerr << "push failed: " << e.what() << "\n";
                return 2;
            }
        }
        if (*bis) {
            kc::ControlPolygon a = load_polygon(bis_in0);
            kc::ControlPolygon b = load_polygon(bis_in1);
            if (a.points.size() != b.points.size())
                throw kc::input_error("bisect: the two polygons differ in vertex count");
            int moved = -1;
            const int last = static_cast<int>(a.points.size()) - 1;
            for (int i = 1; i < last; ++i) {
                if (a.points[i] == b.points[i]) continue;
                if (moved != -1) throw kc::input_error("bisect: polygons differ in more than one vertex");
                moved = i;
            }
            if (!(a.points[0] == b.points[0]))
                throw kc::input_error("bisect: base points differ");
            if (moved == -1) throw kc::input_error("bisect: polygons are identical");
            kc::VertexHomotopy h(a, moved, b.points[moved]);
            try {
                kc::TransitionInterval t = kc::bisect_transition(h, kc::Rational::parse(bis_tol), bis_level);
                write_output(bis_out, kc::serialize_transition(t));
                return 0;
            } catch (const kc::certification_failure& e) {
                std::cerr << "bisection failed: " << e.what() << "\n";
                return 2;
            }
        }
        if (*enc) {
            kc::ControlPolygon cp = load_polygon(enc_in);
            kc::SubdivisionForest forest = kc::subdivide_levels(cp, enc_level);
            const int n = static_cast<int>(forest.pieces.size());
            if (enc_piece < 0 || enc_piece >= n)
                throw kc::input_error("--piece out of range for level " + std::to_string(enc_level));
            const kc::ControlPolygon& piece = forest.pieces[enc_piece];
            const kc::Point3 mid = kc::evaluate(piece, kc::Rational(kc::Int(1), kc::Int(2)));
            kc::Point3 nl, nr;
            if (enc_nl.empty() != enc_nr.empty())
                throw kc::input_error("supply both --normal-l and --normal-r or neither");
            if (enc_nl.empty()) {
                auto defaults = kc::default_enclosure_normals(piece, mid);
                nl = defaults.first;
                nr = defaults.second;
            } else {
                nl = parse_triple(enc_nl);
                nr = parse_triple(enc_nr);
            }
            try {
                kc::Enclosure e = kc::build_enclosure(piece, mid, nl, nr);
                const kc::Rational q(kc::Int(1), kc::Int(4));
                const std::array<kc::Rational, 3> samples{q, kc::Rational(kc::Int(1), kc::Int(2)),
                                                          kc::Rational(3) * q};
                kc::EnclosureEvidence ev = kc::curve_in_enclosure(piece, e, samples);
                std::ostringstream out;
                out << "enclosure piece " << enc_piece << " level " << enc_level << "\n";
                out << "normals-swapped " << (e.normals_swapped ? 1 : 0) << "\n";
                out << "plane-l " << e.left_half.str() << "\n";
                out << "plane-r " << e.right_half.str() << "\n";
                out << "mid " << mid.str() << "\n";
                out << "plane-polyline-counts " << ev.plane_polyline_count_l << " " << ev.plane_polyline_count_r
                    << "\n";
                out << "control-points-inside " << (ev.control_points_inside ? 1 : 0) << "\n";
                for (const auto& [t, inside] : ev.samples)
                    out << "sample " << t.str() << " inside " << (inside ? 1 : 0) << "\n";
                for (int m2 = 0; m2 < n; ++m2) {
                    if (m2 == enc_piece) continue;
                    std::vector<kc::Point3> allowed;
                    const int lo = std::min(m2, enc_piece), hi = std::max(m2, enc_piece);
                    if (hi == lo + 1) allowed.push_back(forest.pieces[lo].back());
                    if (lo == 0 && hi == n - 1 && cp.closed) allowed.push_back(forest.pieces[0].front());
                    kc::EnclosureSeparation sep =
                        kc::enclosure_disjoint(e, kc::convex_hull(forest.pieces[m2].points), allowed);
                    const char* v = sep.verdict == kc::SeparationResult::Verdict::separated ? "separated"
                                    : sep.verdict == kc::SeparationResult::Verdict::shared_points_only
                                        ? "shared-points-only"
                                        : "overlapping";
                    out << "vs-piece " << m2 << " " << v;
                    for (const kc::Point3& p : sep.shared) out << " shared " << p.str();
                    out << "\n";
                }
                write_output(enc_out, out.str());
                return 0;
            } catch (const kc::certification_failure& e) {
                std::cerr << "enclosure evidence failed: " << e.what() << "\n";
                return 2;
            }
        }
    } catch (const kc::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const kc::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
