#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "knotcert/errors.hpp"

namespace knotcert {

using Int = mpz_class;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Integers have denominator 1. The text form is "p/q" or "p"
/// (decimal, optional leading minus); it is the number grammar of every
/// file format in this project.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    Int numerator() const { return Int(v_.get_num()); }
    Int denominator() const { return Int(v_.get_den()); }

    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw input_error("rational division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// 2^k for k >= 0.
    static Rational pow2(unsigned k) {
        Int n = 1;
        n <<= k;
        return Rational(n);
    }

    double to_double() const { return v_.get_d(); }

private:
    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.v_ = q; // gmp arithmetic results are already canonical
        return r;
    }
    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace knotcert
