#pragma once

#include <map>
#include <vector>

#include "sjack/sympoly.hpp"

namespace sjack {

/// Finitely supported Laurent polynomial over Q in a fixed number of variables.
struct Laurent {
    int nvars = 0;
    std::map<std::vector<int>, Rat> terms;

    Laurent() = default;
    explicit Laurent(int nv) : nvars(nv) {}
    static Laurent constant(int nv, const Rat& c) {
        Laurent r(nv);
        if (c != 0) r.terms.emplace(std::vector<int>(static_cast<std::size_t>(nv), 0), c);
        return r;
    }

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& e, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
    Laurent r(a.nvars);
    std::vector<int> e(static_cast<std::size_t>(a.nvars));
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

inline Laurent laurent_pow(const Laurent& a, long k) {
    Laurent r = Laurent::constant(a.nvars, Rat(1));
    for (long i = 0; i < k; ++i) r = laurent_mul(r, a);
    return r;
}

/// Full monomial expansion of a symmetric polynomial with rational coefficients
/// (coefficients evaluated at the given theta). Exponents negated when invert is set.
inline Laurent sympoly_to_laurent(const SymPoly& p, const Rat& theta, bool invert = false) {
    Laurent r(p.n);
    for (const auto& [lam, c] : p.coeffs) {
        Rat v = c.evaluate(theta);
        if (v == 0) continue;
        for (auto e : orbit_vectors(lam, p.n)) {
            if (invert)
                for (auto& x : e) x = -x;
            r.add_term(e, v);
        }
    }
    return r;
}

/// The weight prod_{j<k} [(1 - z_j/z_k)(1 - z_k/z_j)]^theta for integer theta >= 0,
/// which is a Laurent polynomial.
inline Laurent macdonald_weight_laurent(int n, long theta) {
    Laurent r = Laurent::constant(n, Rat(1));
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Laurent f(n);
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            f.add_term(e, Rat(1));
            e[static_cast<std::size_t>(j)] = 1;
            e[static_cast<std::size_t>(k)] = -1;
            f.add_term(e, Rat(-1));
            Laurent g(n);
            e.assign(static_cast<std::size_t>(n), 0);
            g.add_term(e, Rat(1));
            e[static_cast<std::size_t>(j)] = -1;
            e[static_cast<std::size_t>(k)] = 1;
            g.add_term(e, Rat(-1));
            r = laurent_mul(r, laurent_pow(laurent_mul(f, g), theta));
        }
    }
    return r;
}

/// sum_e a[e] * b[e], i.e. the constant term of a(z) * b(1/z).
inline Rat constant_pairing(const Laurent& a, const Laurent& b) {
    Rat acc(0);
    const Laurent& small = a.terms.size() <= b.terms.size() ? a : b;
    const Laurent& big = a.terms.size() <= b.terms.size() ? b : a;
    for (const auto& [e, c] : small.terms) {
        auto it = big.terms.find(e);
        if (it != big.terms.end()) acc += c * it->second;
    }
    return acc;
}

} // namespace sjack
