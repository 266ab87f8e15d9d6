#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "sjack/base.hpp"

namespace sjack {

/// Univariate polynomial over Z in the formal parameter (printed as "t").
/// Coefficients stored ascending; no trailing zeros; zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long v) { if (v != 0) c_.push_back(Int(v)); }
    IntPoly(const Int& v) { if (v != 0) c_.push_back(v); }
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The monomial a*t^k.
    static IntPoly monomial(const Int& a, int k) {
        if (a == 0) return IntPoly();
        std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
        c.back() = a;
        return IntPoly(std::move(c));
    }
    static IntPoly theta() { return monomial(Int(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& coeff(int k) const {
        static const Int zero(0);
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : zero;
    }
    const Int& lc() const { assert(!c_.empty()); return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    friend IntPoly operator-(const IntPoly& a) {
        IntPoly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }
    IntPoly& operator+=(const IntPoly& o) { *this = *this + o; return *this; }
    IntPoly& operator*=(const IntPoly& o) { *this = *this * o; return *this; }

    IntPoly times_power(int k) const {  // multiply by t^k, k >= 0
        if (is_zero() || k == 0) return *this;
        std::vector<Int> c(c_.size() + static_cast<std::size_t>(k), Int(0));
        std::copy(c_.begin(), c_.end(), c.begin() + k);
        return IntPoly(std::move(c));
    }

    /// t^deg * p(1/t); constant term of the result is lc(p), so never divisible by t.
    IntPoly reversed() const {
        std::vector<Int> c(c_.rbegin(), c_.rend());
        return IntPoly(std::move(c));
    }

    /// Largest k with t^k | p (0 for p with nonzero constant term; 0 for p == 0).
    int low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return 0;
    }
    IntPoly shift_down(int k) const {  // divide by t^k, must be exact
        assert(low_degree() >= k || is_zero());
        if (is_zero() || k == 0) return *this;
        return IntPoly(std::vector<Int>(c_.begin() + k, c_.end()));
    }

    /// GCD of coefficients, with the sign of the leading coefficient.
    Int content() const {
        if (is_zero()) return Int(0);
        Int g(0);
        for (const auto& x : c_) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t()); }
        if (lc() < 0) g = -g;
        return g;
    }
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        return divexact_scalar(content());
    }
    IntPoly divexact_scalar(const Int& d) const {
        assert(d != 0);
        IntPoly r = *this;
        for (auto& x : r.c_) {
            assert(x % d == 0);
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
        }
        return r;
    }

    /// Exact division by b; throws division_by_zero for b == 0, asserts exactness.
    IntPoly divexact(const IntPoly& b) const {
        if (b.is_zero()) throw division_by_zero("IntPoly::divexact by zero");
        if (is_zero()) return IntPoly();
        assert(degree() >= b.degree());
        std::vector<Int> rem = c_;
        std::vector<Int> q(static_cast<std::size_t>(degree() - b.degree()) + 1, Int(0));
        for (int k = degree() - b.degree(); k >= 0; --k) {
            Int top = rem[static_cast<std::size_t>(k + b.degree())];
            if (top == 0) continue;
            assert(top % b.lc() == 0);
            Int qk;
            mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
            q[static_cast<std::size_t>(k)] = qk;
            for (int i = 0; i <= b.degree(); ++i)
                rem[static_cast<std::size_t>(k + i)] -= qk * b.coeff(i);
        }
        for (const auto& x : rem) { (void)x; assert(x == 0); }
        return IntPoly(std::move(q));
    }

    /// Pseudo-remainder of a by b: lc(b)^(da-db+1) * a == q*b + r with deg r < deg b.
    static IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
        assert(!b.is_zero());
        int db = b.degree();
        while (!a.is_zero() && a.degree() >= db) {
            int shift = a.degree() - db;
            Int alc = a.lc();
            std::vector<Int> c(a.c_.size(), Int(0));
            for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * b.lc();
            for (int i = 0; i <= db; ++i)
                c[static_cast<std::size_t>(shift + i)] -= alc * b.coeff(i);
            c.pop_back();
            a = IntPoly(std::move(c));
        }
        return a;
    }

    /// Primitive PRS gcd; result is primitive with positive leading coefficient
    /// (scaled by gcd of the contents).
    static IntPoly gcd(IntPoly a, IntPoly b) {
        if (a.is_zero() && b.is_zero()) return IntPoly();
        if (a.is_zero()) return b.content() < 0 ? -b : b;
        if (b.is_zero()) return a.content() < 0 ? -a : a;
        Int ca = a.content(), cb = b.content();
        Int cg;
        mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        a = a.divexact_scalar(ca);
        b = b.divexact_scalar(cb);
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            IntPoly r = pseudo_rem(a, b);
            a = std::move(b);
            b = r.is_zero() ? IntPoly() : r.primitive_part();
        }
        if (a.lc() < 0) a = -a;
        return a * IntPoly(cg);
    }

    Rat evaluate(const Rat& t) const {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + Rat(*it);
        return r;
    }

    /// Descending-power rendering in the variable "t", e.g. "2*t^2 - t + 3".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Int& a = coeff(k);
            if (a == 0) continue;
            Int mag = a < 0 ? Int(-a) : a;
            if (s.empty()) { if (a < 0) s += "-"; }
            else s += (a < 0) ? " - " : " + ";
            if (k == 0) { s += mag.get_str(); continue; }
            if (mag != 1) { s += mag.get_str(); s += "*"; }
            s += "t";
            if (k > 1) { s += "^"; s += std::to_string(k); }
        }
        return s;
    }

private:
    std::vector<Int> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

} // namespace sjack
