#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "knotcert/homotopy.hpp"
#include "knotcert/polygon_io.hpp"
#include "knotcert/report.hpp"
#include "knotcert/svg.hpp"

namespace py = pybind11;
namespace kc = knotcert;

namespace {

kc::Axis axis_from(const std::string& tag) {
    if (tag == "xy") return kc::Axis::Z;
    if (tag == "yz") return kc::Axis::X;
    if (tag == "xz") return kc::Axis::Y;
    throw kc::input_error("axis must be 'xy', 'yz' or 'xz'");
}

kc::ControlPolygon polygon(const std::string& text) { return kc::parse_polygon(text); }

} // namespace

PYBIND11_MODULE(_knotcert, m) {
    m.doc() = "exact-arithmetic Bézier knot certification";

    py::register_exception<kc::input_error>(m, "InputError");
    py::register_exception<kc::certification_failure>(m, "CertificationFailure");

    m.def(
        "subdivide_table",
        [](const std::string& text, int levels, const std::string& scale) {
            kc::ControlPolygon cp = polygon(text);
            if (scale == "auto") cp = kc::scale_for_subdivision(cp, levels).polygon;
            else if (scale != "none") throw kc::input_error("scale must be 'auto' or 'none'");
            return kc::forest_table(kc::subdivide_levels(cp, levels));
        },
        py::arg("polygon"), py::arg("levels"), py::arg("scale") = "auto",
        "de Casteljau subdivision in the brace table format");

    m.def(
        "evaluate",
        [](const std::string& text, const std::string& t) {
            const kc::Point3 p = kc::evaluate(polygon(text), kc::Rational::parse(t));
            return py::make_tuple(p.x.str(), p.y.str(), p.z.str());
        },
        py::arg("polygon"), py::arg("t"), "exact curve point as rational strings");

    m.def(
        "classify",
        [](const std::string& text, int max_level) {
            const auto [cls, cert] = kc::bezier_knot_type(polygon(text), max_level);
            py::dict out;
            out["class"] = cls.name();
            out["jones"] = cls.jones.str();
            out["level"] = cert.level;
            out["enclosure_repairs"] = cert.enclosures.size();
            return out;
        },
        py::arg("polygon"), py::arg("max_level") = kc::kDefaultMaxLevel,
        "certified knot class of the Bézier curve");

    m.def(
        "certify_report",
        [](const std::string& text, int level) {
            return kc::serialize_certificate(kc::certify_isotopy(polygon(text), level));
        },
        py::arg("polygon"), py::arg("level"), "isotopy certificate at the given subdivision level");

    m.def(
        "revalidate_report",
        [](const std::string& text, const std::string& report) {
            return kc::revalidate_certificate(polygon(text), kc::parse_certificate(report));
        },
        py::arg("polygon"), py::arg("report"),
        "recheck a serialized certificate; empty string means it holds");

    m.def(
        "diagram_crossings",
        [](const std::string& text, const std::string& axis) {
            const kc::KnotDiagram d =
                kc::project_diagram(kc::PLKnot::from_closed_polygon(polygon(text)), axis_from(axis));
            py::list out;
            for (const kc::Crossing& c : d.crossings) {
                py::dict e;
                e["u"] = c.at.u.str();
                e["v"] = c.at.v.str();
                e["over_edge"] = c.over_edge;
                e["under_edge"] = c.under_edge;
                e["over_depth"] = c.over_depth.str();
                e["under_depth"] = c.under_depth.str();
                e["sign"] = c.sign;
                out.append(e);
            }
            return out;
        },
        py::arg("polygon"), py::arg("axis"), "exact crossing list of a regular projection");

    m.def(
        "push_report",
        [](const std::string& text, int vertex, const std::string& target) {
            std::string s = target;
            for (char& c : s)
                if (c == ',') c = ' ';
            std::istringstream in(s);
            std::string xs, ys, zs;
            if (!(in >> xs >> ys >> zs)) throw kc::input_error("target must be 'x,y,z'");
            const kc::Point3 to{kc::Rational::parse(xs), kc::Rational::parse(ys), kc::Rational::parse(zs)};
            return kc::serialize_push(kc::certify_push(polygon(text), vertex, to));
        },
        py::arg("polygon"), py::arg("vertex"), py::arg("target"), "certificate for a one-vertex move");

    m.def(
        "bisect_report",
        [](const std::string& text0, const std::string& text1, const std::string& tol, int max_level) {
            const kc::ControlPolygon a = polygon(text0);
            const kc::ControlPolygon b = polygon(text1);
            int moved = -1;
            for (size_t i = 1; i + 1 < a.points.size(); ++i)
                if (!(a.points[i] == b.points[i])) {
                    if (moved != -1) throw kc::input_error("polygons differ in more than one vertex");
                    moved = static_cast<int>(i);
                }
            if (moved < 0) throw kc::input_error("polygons are identical");
            const kc::VertexHomotopy h(a, moved, b.points[moved]);
            return kc::serialize_transition(kc::bisect_transition(h, kc::Rational::parse(tol), max_level));
        },
        py::arg("polygon0"), py::arg("polygon1"), py::arg("tol") = "1/1024",
        py::arg("max_level") = kc::kDefaultMaxLevel, "bracket the knot-type transition parameter");

    m.def(
        "render_svg",
        [](const std::string& text, const std::string& axis) {
            return kc::render_svg(
                kc::project_diagram(kc::PLKnot::from_closed_polygon(polygon(text)), axis_from(axis)));
        },
        py::arg("polygon"), py::arg("axis"), "deterministic SVG of the projection");
}
