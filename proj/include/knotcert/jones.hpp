#pragma once

#include <map>
#include <string>

#include "knotcert/diagram.hpp"

namespace knotcert {

/// Integer Laurent polynomial with exponents counted in quarter powers of t
/// (exponent 4 means t^1, -16 means t^-4). Also used internally with
/// exponents in the bracket variable A.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exp, Int coeff);

    void add_term(int exp, const Int& coeff);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    const std::map<int, Int>& terms() const { return c_; }

    /// Substitute variable -> variable^-1 (mirror image of the knot).
    LaurentPoly inverted() const;

    /// Human form over t with quarter exponents, e.g. "-t^-4 + t^-3 + t^-1".
    std::string str() const;

private:
    std::map<int, Int> c_;
};

/// Jones polynomial via the Kauffman bracket state sum (2^c states), writhe
/// normalization (-A^3)^-w, and A = t^-1/4. Crossing count is capped at 20.
LaurentPoly kauffman_jones(const KnotDiagram& d);

struct KnotClass {
    enum class Kind { unknot, trefoil_left, trefoil_right, other } kind;
    LaurentPoly jones;

    std::string name() const;
    friend bool operator==(const KnotClass& a, const KnotClass& b) { return a.kind == b.kind && a.jones == b.jones; }
};

/// Jones = 1 -> unknot (within this project's diagram scope; Jones does not
/// detect the unknot in general), trefoil polynomials -> the matching
/// chirality (right-handed: -t^4 + t^3 + t), anything else -> other.
KnotClass classify(const KnotDiagram& d);

/// The two reference trefoil polynomials.
LaurentPoly trefoil_right_jones();
LaurentPoly trefoil_left_jones();

} // namespace knotcert
