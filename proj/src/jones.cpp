#include "knotcert/jones.hpp"

#include <algorithm>
#include <numeric>

#include "knotcert/errors.hpp"

namespace knotcert {

LaurentPoly LaurentPoly::monomial(int exp, Int coeff) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

void LaurentPoly::add_term(int exp, const Int& coeff) {
    if (coeff == 0) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
        c_.emplace(exp, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.c_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.add_term(-e, c);
    return out;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        const Int a = abs(c);
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        std::string mono;
        if (e == 0) {
            mono = a.get_str();
        } else {
            if (a != 1) mono = a.get_str() + "*";
            mono += "t^";
            if (e % 4 == 0)
                mono += std::to_string(e / 4);
            else
                mono += "(" + std::to_string(e) + "/4)";
        }
        out += mono;
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

LaurentPoly kauffman_jones(const KnotDiagram& d) {
    const int c = static_cast<int>(d.crossings.size());
    if (c == 0) return LaurentPoly::one();
    if (c > 20) throw capacity_error("kauffman_jones: " + std::to_string(c) + " crossings exceeds the state-sum bound of 20");

    // passages in curve order; arc k runs passage k -> passage k+1 (cyclic)
    struct Passage {
        int edge;
        Rational param;
        int crossing;
        bool over;
    };
    std::vector<Passage> ps;
    ps.reserve(2 * c);
    for (int i = 0; i < c; ++i) {
        ps.push_back({d.crossings[i].over_edge, d.crossings[i].over_param, i, true});
        ps.push_back({d.crossings[i].under_edge, d.crossings[i].under_param, i, false});
    }
    std::sort(ps.begin(), ps.end(), [](const Passage& a, const Passage& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.param < b.param;
    });
    const int m = 2 * c;

    // for each crossing: in/out arc ids of the over and under passage
    struct Ends {
        int over_in = -1, over_out = -1, under_in = -1, under_out = -1;
    };
    std::vector<Ends> ends(c);
    for (int k = 0; k < m; ++k) {
        const Passage& p = ps[k];
        const int in_arc = (k + m - 1) % m;
        const int out_arc = k;
        if (p.over) {
            ends[p.crossing].over_in = in_arc;
            ends[p.crossing].over_out = out_arc;
        } else {
            ends[p.crossing].under_in = in_arc;
            ends[p.crossing].under_out = out_arc;
        }
    }

    // A-smoothing joins the regions swept by rotating the over strand
    // counterclockwise onto the under strand; with the four ends in
    // counterclockwise order (under-in, x, under-out, y) the A pairs are
    // (under-in, x) and (under-out, y), where x is over-out when
    // cross(over, under) > 0 and over-in otherwise.
    struct Pairs {
        std::array<std::pair<int, int>, 2> a, b;
    };
    std::vector<Pairs> pairs(c);
    for (int i = 0; i < c; ++i) {
        const Ends& e = ends[i];
        if (d.crossings[i].sign > 0) {
            pairs[i].a = {{{e.under_in, e.over_out}, {e.under_out, e.over_in}}};
            pairs[i].b = {{{e.under_in, e.over_in}, {e.under_out, e.over_out}}};
        } else {
            pairs[i].a = {{{e.under_in, e.over_in}, {e.under_out, e.over_out}}};
            pairs[i].b = {{{e.under_in, e.over_out}, {e.under_out, e.over_in}}};
        }
    }

    LaurentPoly bracket; // in the variable A
    const LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    for (unsigned state = 0; state < (1u << c); ++state) {
        UnionFind uf(m);
        int exp = 0;
        for (int i = 0; i < c; ++i) {
            const bool use_a = (state >> i) & 1u;
            exp += use_a ? 1 : -1;
            for (const auto& [x, y] : (use_a ? pairs[i].a : pairs[i].b)) uf.unite(x, y);
        }
        int loops = 0;
        for (int x = 0; x < m; ++x)
            if (uf.find(x) == x) ++loops;
        LaurentPoly term = LaurentPoly::monomial(exp, 1);
        for (int l = 1; l < loops; ++l) term = term * delta;
        bracket = bracket + term;
    }

    int writhe = 0;
    for (const Crossing& x : d.crossings) writhe += x.sign;

    // f = (-A^3)^-w * bracket,  then A = t^-1/4 flips exponent signs
    LaurentPoly f;
    const Int sign = (writhe % 2 == 0) ? 1 : -1;
    for (const auto& [e, co] : bracket.terms()) f.add_term(e - 3 * writhe, sign * co);
    return f.inverted();
}

LaurentPoly trefoil_right_jones() {
    LaurentPoly p;
    p.add_term(4, 1);   // t
    p.add_term(12, 1);  // t^3
    p.add_term(16, -1); // -t^4
    return p;
}

LaurentPoly trefoil_left_jones() { return trefoil_right_jones().inverted(); }

std::string KnotClass::name() const {
    switch (kind) {
        case Kind::unknot: return "Unknot";
        case Kind::trefoil_left: return "Trefoil(left)";
        case Kind::trefoil_right: return "Trefoil(right)";
        default: return "Other[" + jones.str() + "]";
    }
}

KnotClass classify(const KnotDiagram& d) {
    LaurentPoly j = kauffman_jones(d);
    if (j.is_one()) return {KnotClass::Kind::unknot, std::move(j)};
    if (j == trefoil_right_jones()) return {KnotClass::Kind::trefoil_right, std::move(j)};
    if (j == trefoil_left_jones()) return {KnotClass::Kind::trefoil_left, std::move(j)};
    return {KnotClass::Kind::other, std::move(j)};
}

} // namespace knotcert
