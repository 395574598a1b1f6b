#pragma once

#include <array>
#include <string>

#include "knotcert/rational.hpp"

namespace knotcert {

enum class Axis { X = 0, Y = 1, Z = 2 };

inline const char* axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "X";
        case Axis::Y: return "Y";
        default: return "Z";
    }
}

struct Point2 {
    Rational u, v;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.u - b.u, a.v - b.v}; }
    std::string str() const { return "(" + u.str() + ", " + v.str() + ")"; }
};

inline Rational cross2(const Point2& a, const Point2& b) { return a.u * b.v - a.v * b.u; }
inline Rational dot2(const Point2& a, const Point2& b) { return a.u * b.u + a.v * b.v; }

struct Point3 {
    Rational x, y, z;

    friend bool operator==(const Point3&, const Point3&) = default;
    friend Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Point3 operator*(const Rational& s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }

    const Rational& coord(Axis a) const {
        switch (a) {
            case Axis::X: return x;
            case Axis::Y: return y;
            default: return z;
        }
    }
    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }
};

inline Rational dot3(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross3(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Projection dropping one coordinate, oriented as seen from the positive
/// side of the dropped axis: drop Z -> (x,y), drop X -> (y,z), drop Y -> (z,x).
inline Point2 project_drop(const Point3& p, Axis drop) {
    switch (drop) {
        case Axis::Z: return {p.x, p.y};
        case Axis::X: return {p.y, p.z};
        default: return {p.z, p.x};
    }
}

struct Segment2 {
    Point2 p, q;
};

struct Segment3 {
    Point3 p, q;
};

/// Oriented plane a*x + b*y + c*z + d = 0 with (a,b,c) != 0.
struct Plane {
    Rational a, b, c, d;

    Plane() = default;
    Plane(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a.is_zero() && b.is_zero() && c.is_zero())
            throw input_error("plane with zero normal");
    }

    static Plane through(const Point3& normal, const Point3& base) {
        return Plane(normal.x, normal.y, normal.z, -dot3(normal, base));
    }

    Point3 normal() const { return {a, b, c}; }
    Rational eval(const Point3& p) const { return a * p.x + b * p.y + c * p.z + d; }
    int side(const Point3& p) const { return eval(p).sign(); }
    Plane flipped() const { return Plane(-a, -b, -c, -d); }

    friend bool operator==(const Plane&, const Plane&) = default;
    std::string str() const { return a.str() + " " + b.str() + " " + c.str() + " " + d.str(); }
};

} // namespace knotcert
