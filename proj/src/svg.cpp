#include "knotcert/svg.hpp"

#include <algorithm>
#include <sstream>

#include "knotcert/errors.hpp"

namespace knotcert {

std::string decimal_str(const Rational& r, int significant_digits) {
    if (r.is_zero()) return "0";
    const bool neg = r.sign() < 0;
    Int num = abs(r.numerator());
    const Int den = r.denominator();
    Int ip = num / den;
    Int rem = num % den;

    std::string int_digits = ip.get_str();
    std::string frac_digits;
    int significant = (ip == 0) ? 0 : static_cast<int>(int_digits.size());
    bool leading = ip == 0;
    while (rem != 0 && significant < significant_digits) {
        rem *= 10;
        Int d = rem / den;
        rem = rem % den;
        frac_digits += d.get_str();
        if (leading && d != 0) leading = false;
        if (!leading) ++significant;
    }
    std::string out = neg ? "-" : "";
    out += (ip == 0 ? "0" : int_digits);
    while (!frac_digits.empty() && frac_digits.back() == '0') frac_digits.pop_back();
    if (!frac_digits.empty()) out += "." + frac_digits;
    return out;
}

namespace {

struct Mapper {
    Rational min_u, max_v, size;
    std::string x(const Rational& u) const { return decimal_str(u - min_u, 30); }
    std::string y(const Rational& v) const { return decimal_str(max_v - v, 30); }
};

} // namespace

std::string render_svg(const KnotDiagram& d) {
    const auto& pv = d.projected_vertices;
    if (pv.empty()) throw input_error("render_svg: empty diagram");
    Rational min_u = pv[0].u, max_u = pv[0].u, min_v = pv[0].v, max_v = pv[0].v;
    for (const Point2& p : pv) {
        min_u = min(min_u, p.u);
        max_u = max(max_u, p.u);
        min_v = min(min_v, p.v);
        max_v = max(max_v, p.v);
    }
    Rational size = max(max_u - min_u, max_v - min_v);
    if (size.is_zero()) size = Rational(1);
    const Rational margin = size / Rational(20);
    min_u = min_u - margin;
    max_v = max_v + margin;
    const Rational width = max_u - min_u + margin;
    const Rational height = max_v - min_v + margin;
    const Mapper map{min_u, max_v, size};

    const Rational gap = size / Rational(60);
    const Rational dot = size / Rational(150);
    const Rational stroke = size / Rational(240);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << decimal_str(width, 30) << " "
        << decimal_str(height, 30) << "\">\n";
    out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << decimal_str(stroke, 30)
        << "\" stroke-linecap=\"round\">\n";

    const int n = static_cast<int>(pv.size());
    for (int e = 0; e < n; ++e) {
        const Point2& a = pv[e];
        const Point2& b = pv[(e + 1) % n];
        // parameter intervals removed around under-passages of this edge
        std::vector<Rational> cuts;
        for (const Crossing& c : d.crossings)
            if (c.under_edge == e) cuts.push_back(c.under_param);
        std::sort(cuts.begin(), cuts.end());
        const Point2 dir = b - a;
        Rational len = max(dir.u.abs(), dir.v.abs());
        Rational delta = gap / len;
        std::vector<std::pair<Rational, Rational>> keep;
        Rational pos(0);
        for (size_t i = 0; i < cuts.size(); ++i) {
            Rational d0 = delta;
            // keep the gap clear of the edge ends and of neighbouring crossings
            d0 = min(d0, cuts[i] / Rational(2));
            d0 = min(d0, (Rational(1) - cuts[i]) / Rational(2));
            if (i > 0) d0 = min(d0, (cuts[i] - cuts[i - 1]) / Rational(3));
            if (i + 1 < cuts.size()) d0 = min(d0, (cuts[i + 1] - cuts[i]) / Rational(3));
            keep.emplace_back(pos, cuts[i] - d0);
            pos = cuts[i] + d0;
            out << "<!-- under-break edge=" << e << " -->\n";
        }
        keep.emplace_back(pos, Rational(1));
        for (const auto& [t0, t1] : keep) {
            if (t0 >= t1) continue;
            const Point2 p{a.u + t0 * dir.u, a.v + t0 * dir.v};
            const Point2 q{a.u + t1 * dir.u, a.v + t1 * dir.v};
            out << "<line x1=\"" << map.x(p.u) << "\" y1=\"" << map.y(p.v) << "\" x2=\"" << map.x(q.u)
                << "\" y2=\"" << map.y(q.v) << "\"/>\n";
        }
    }
    out << "</g>\n<g fill=\"black\" stroke=\"none\">\n";
    for (const Crossing& c : d.crossings)
        out << "<circle cx=\"" << map.x(c.at.u) << "\" cy=\"" << map.y(c.at.v) << "\" r=\""
            << decimal_str(dot, 30) << "\"/>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace knotcert
