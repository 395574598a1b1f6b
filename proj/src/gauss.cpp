#include "knotcert/gauss.hpp"

#include <algorithm>

namespace knotcert {

GaussCode gauss_code(const KnotDiagram& d) {
    struct Passage {
        int edge;
        Rational param;
        int label;
        bool over;
        int sign;
    };
    std::vector<Passage> passages;
    passages.reserve(d.crossings.size() * 2);
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        const Crossing& x = d.crossings[c];
        passages.push_back({x.over_edge, x.over_param, static_cast<int>(c), true, x.sign});
        passages.push_back({x.under_edge, x.under_param, static_cast<int>(c), false, x.sign});
    }
    std::sort(passages.begin(), passages.end(), [](const Passage& a, const Passage& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.param < b.param;
    });
    GaussCode code;
    code.reserve(passages.size());
    for (const Passage& p : passages) code.push_back({p.label, p.over, p.sign});
    return code;
}

namespace {

bool apply_r1(GaussCode& code) {
    const int n = static_cast<int>(code.size());
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        if (code[i].label == code[j].label) {
            if (j > i) {
                code.erase(code.begin() + j);
                code.erase(code.begin() + i);
            } else { // wrap: last + first
                code.erase(code.begin() + i);
                code.erase(code.begin());
            }
            return true;
        }
    }
    return false;
}

bool apply_r2(GaussCode& code) {
    const int n = static_cast<int>(code.size());
    for (int i = 0; i < n; ++i) {
        const int i2 = (i + 1) % n;
        if (!code[i].over || !code[i2].over) continue;
        const int a = code[i].label, b = code[i2].label;
        if (a == b) continue;
        for (int j = 0; j < n; ++j) {
            const int j2 = (j + 1) % n;
            if (code[j].over || code[j2].over) continue;
            const int c = code[j].label, dd = code[j2].label;
            const bool match = (c == a && dd == b) || (c == b && dd == a);
            if (!match) continue;
            GaussCode next;
            next.reserve(code.size() - 4);
            for (int k = 0; k < n; ++k)
                if (code[k].label != a && code[k].label != b) next.push_back(code[k]);
            code = std::move(next);
            return true;
        }
    }
    return false;
}

} // namespace

GaussCode reduce_gauss(GaussCode code) {
    for (;;) {
        if (apply_r1(code)) continue;
        if (apply_r2(code)) continue;
        return code;
    }
}

std::string gauss_str(const GaussCode& code) {
    std::string out;
    for (const GaussEntry& e : code) {
        if (!out.empty()) out += " ";
        out += (e.over ? "O" : "U") + std::to_string(e.label + 1);
    }
    return out;
}

} // namespace knotcert
