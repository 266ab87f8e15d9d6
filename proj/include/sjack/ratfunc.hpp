#pragma once

#include <string>
#include <utility>

#include "sjack/intpoly.hpp"

namespace sjack {

/// Element of Q(theta): reduced ratio of integer polynomials in t.
///
/// Canonical form (equality is structural): numerator and denominator have no
/// common polynomial factor over Q, gcd(content(num), content(den)) = 1, the
/// denominator is nonzero with positive leading coefficient.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long v) : num_(v), den_(1) {}
    RatFunc(const Int& v) : num_(v), den_(1) {}
    RatFunc(const Rat& q) : num_(q.get_num()), den_(q.get_den()) {}
    RatFunc(IntPoly num, IntPoly den = IntPoly(1)) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero("RatFunc with zero denominator");
        normalize();
    }

    static RatFunc theta() { return RatFunc(IntPoly::theta()); }
    static RatFunc theta_inverse() { return RatFunc(IntPoly(1), IntPoly::theta()); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == IntPoly(1) && den_ == IntPoly(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, no_normalize_tag{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        // cross-cancel before multiplying to keep intermediate degrees down
        IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
        IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = a.num_.divexact(g1) * b.num_.divexact(g2);
        r.den_ = a.den_.divexact(g2) * b.den_.divexact(g1);
        r.normalize();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    RatFunc inverse() const {
        if (is_zero()) throw division_by_zero("RatFunc::inverse of zero");
        RatFunc r;
        if (num_.lc() < 0) { r.num_ = -den_; r.den_ = -num_; }
        else { r.num_ = den_; r.den_ = num_; }
        return r;
    }

    /// a(t) -> a(1/t), re-canonicalized.
    RatFunc substitute_inverse() const {
        if (is_zero()) return RatFunc();
        IntPoly n = num_.reversed();
        IntPoly d = den_.reversed();
        int dn = num_.degree(), dd = den_.degree();
        if (dd > dn) n = n.times_power(dd - dn);
        else if (dn > dd) d = d.times_power(dn - dd);
        return RatFunc(std::move(n), std::move(d));
    }

    /// Exact evaluation at a rational t; throws pole_at_theta on a denominator zero.
    Rat evaluate(const Rat& t) const {
        Rat d = den_.evaluate(t);
        if (d == 0) throw pole_at_theta("pole at t = " + t.get_str());
        Rat n = num_.evaluate(t);
        Rat r = n / d;
        r.canonicalize();
        return r;
    }
    double evaluate_double(const Rat& t) const { return rat_to_double(evaluate(t)); }

    /// If constant, the value as an exact rational.
    Rat constant_value() const {
        if (!is_constant()) throw bad_input("RatFunc is not constant: " + to_string());
        Rat r(num_.coeff(0), den_.coeff(0));
        r.canonicalize();
        return r;
    }

    /// "(num)/(den)" with bare integers as the exception, e.g. "1", "-3", "(2*t)/(t + 1)".
    std::string to_string() const {
        if (den_ == IntPoly(1) && num_.is_constant()) return num_.is_zero() ? "0" : num_.coeff(0).get_str();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    struct no_normalize_tag {};
    RatFunc(IntPoly num, IntPoly den, no_normalize_tag) : num_(std::move(num)), den_(std::move(den)) {}

    IntPoly num_, den_;

    void normalize() {
        if (num_.is_zero()) { den_ = IntPoly(1); return; }
        IntPoly g = IntPoly::gcd(num_, den_);
        if (!(g == IntPoly(1))) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        if (den_.lc() < 0) { num_ = -num_; den_ = -den_; }
    }
};

inline RatFunc ratfunc_pow(const RatFunc& base, long e) {
    if (e == 0) return RatFunc(1);
    RatFunc b = e > 0 ? base : base.inverse();
    long k = e > 0 ? e : -e;
    RatFunc r(1);
    for (long i = 0; i < k; ++i) r *= b;
    return r;
}

/// The formal parameter theta: either symbolic or a positive rational.
class ThetaValue {
public:
    static ThetaValue symbolic() { return ThetaValue(true, Rat(1)); }
    static ThetaValue rational(const Rat& v) {
        if (v <= 0) throw bad_input("theta must be positive, got " + v.get_str());
        return ThetaValue(false, v);
    }
    /// Accepts "t" (symbolic) or "p/q"; floats are rejected.
    static ThetaValue parse(const std::string& s) {
        if (s == "t") return symbolic();
        return rational(parse_rational(s));
    }

    bool is_symbolic() const { return symbolic_; }
    const Rat& value() const {
        if (symbolic_) throw symbolic_theta_not_allowed();
        return value_;
    }
    /// As a coefficient-field element: t itself, or the constant.
    RatFunc as_ratfunc() const { return symbolic_ ? RatFunc::theta() : RatFunc(value_); }
    std::string to_string() const { return symbolic_ ? "t" : value_.get_str(); }

private:
    ThetaValue(bool sym, Rat v) : symbolic_(sym), value_(std::move(v)) {}
    bool symbolic_;
    Rat value_;
};

} // namespace sjack
