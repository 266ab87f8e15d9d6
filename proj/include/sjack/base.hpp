#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "sjack/errors.hpp"

namespace sjack {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    long k = e > 0 ? e : -e;
    Rat r(1);
    for (long i = 0; i < k; ++i) r *= b;
    return r;
}

/// Parses "p", "-p" or "p/q" (no floats). Throws bad_input otherwise.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw bad_input("empty rational literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    bool seen_slash = false, digits = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) { digits = true; continue; }
        if (s[i] == '/' && !seen_slash && digits) { seen_slash = true; digits = false; continue; }
        throw bad_input("not a rational literal: " + s);
    }
    if (!digits) throw bad_input("not a rational literal: " + s);
    Rat q(s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline double rat_to_double(const Rat& q) { return q.get_d(); }

} // namespace sjack
