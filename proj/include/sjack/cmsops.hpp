#pragma once

#include <utility>

#include "sjack/superjack.hpp"

namespace sjack {

/// Ambient non-symmetric polynomial ring in n + m variables, with the w's
/// appended after the z's. Exponent vectors of fixed length n + m.
struct FullPoly {
    int n = 0, m = 0;
    std::map<std::vector<int>, RatFunc> coeffs;

    FullPoly() = default;
    FullPoly(int n_, int m_) : n(n_), m(m_) {}

    int nvars() const { return n + m; }
    bool is_zero() const { return coeffs.empty(); }
    void add_term(const std::vector<int>& e, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    bool operator==(const FullPoly& o) const { return n == o.n && m == o.m && coeffs == o.coeffs; }
};

inline FullPoly operator+(const FullPoly& a, const FullPoly& b) {
    if (a.n != b.n || a.m != b.m) throw variable_count_mismatch();
    FullPoly r = a;
    for (const auto& [e, c] : b.coeffs) r.add_term(e, c);
    return r;
}

inline FullPoly operator*(const FullPoly& a, const RatFunc& c) {
    FullPoly r(a.n, a.m);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : a.coeffs) r.coeffs.emplace(e, v * c);
    return r;
}

inline FullPoly operator-(const FullPoly& a, const FullPoly& b) { return a + b * RatFunc(-1); }

inline FullPoly expand(const BiSymPoly& p) {
    FullPoly r(p.n, p.m);
    for (const auto& [k, c] : p.coeffs) {
        for (const auto& ez : orbit_vectors(k.first, p.n)) {
            for (const auto& ew : orbit_vectors(k.second, p.m)) {
                std::vector<int> e = ez;
                e.insert(e.end(), ew.begin(), ew.end());
                r.add_term(e, c);
            }
        }
    }
    return r;
}

/// Inverse of expand; throws not_bisymmetric when q is not S_n x S_m invariant.
inline BiSymPoly symmetrize_back(const FullPoly& q) {
    BiSymPoly r(q.n, q.m);
    std::map<std::pair<Partition, Partition>, std::pair<RatFunc, long>> groups;
    for (const auto& [e, c] : q.coeffs) {
        std::vector<int> ez(e.begin(), e.begin() + q.n), ew(e.begin() + q.n, e.end());
        std::sort(ez.rbegin(), ez.rend());
        std::sort(ew.rbegin(), ew.rend());
        auto key = std::pair{Partition(std::move(ez)), Partition(std::move(ew))};
        auto [it, fresh] = groups.try_emplace(key, std::pair{c, 1L});
        if (!fresh) {
            if (it->second.first != c) throw not_bisymmetric("coefficients differ within an orbit");
            ++it->second.second;
        }
    }
    for (const auto& [key, cc] : groups) {
        if (cc.second != orbit_size(key.first, q.n) * orbit_size(key.second, q.m))
            throw not_bisymmetric("incomplete orbit for " + key.first.to_string());
        r.coeffs.emplace(key, cc.first);
    }
    return r;
}

namespace detail {

inline int parity(int j, int n) { return j < n ? 0 : 1; }

/// (z_j z_j-derivative) scaled by (-theta)^{p(j)}.
inline FullPoly euler_step(const FullPoly& q, int j, const RatFunc& th) {
    FullPoly r(q.n, q.m);
    RatFunc sign = parity(j, q.n) == 0 ? RatFunc(1) : -th;
    for (const auto& [e, c] : q.coeffs) {
        int d = e[static_cast<std::size_t>(j)];
        if (d != 0) r.add_term(e, c * RatFunc(d) * sign);
    }
    return r;
}

/// Exact division of v by (z_j - z_k) via synthetic division in z_j.
inline FullPoly divide_by_zdiff(const FullPoly& v, int j, int k) {
    std::map<int, std::map<std::vector<int>, RatFunc>> levels;
    int dmax = 0;
    for (const auto& [e, c] : v.coeffs) {
        std::vector<int> rest = e;
        int d = rest[static_cast<std::size_t>(j)];
        rest[static_cast<std::size_t>(j)] = 0;
        levels[d].emplace(std::move(rest), c);
        dmax = std::max(dmax, d);
    }
    FullPoly quotient(v.n, v.m);
    std::map<std::vector<int>, RatFunc> carry;  // q_d during the downward sweep
    auto add_into = [](std::map<std::vector<int>, RatFunc>& dst, std::vector<int> e, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = dst.try_emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) dst.erase(it);
        }
    };
    for (int d = dmax; d >= 1; --d) {
        std::map<std::vector<int>, RatFunc> next = levels.count(d) ? levels[d] : std::map<std::vector<int>, RatFunc>{};
        for (const auto& [e, c] : carry) {
            std::vector<int> e2 = e;
            ++e2[static_cast<std::size_t>(k)];
            add_into(next, std::move(e2), c);
        }
        carry = std::move(next);
        for (const auto& [e, c] : carry) {
            std::vector<int> e2 = e;
            e2[static_cast<std::size_t>(j)] = d - 1;
            quotient.add_term(e2, c);
        }
    }
    // remainder = level 0 + z_k * q_0 must vanish
    std::map<std::vector<int>, RatFunc> rem = levels.count(0) ? levels[0] : std::map<std::vector<int>, RatFunc>{};
    for (const auto& [e, c] : carry) {
        std::vector<int> e2 = e;
        ++e2[static_cast<std::size_t>(k)];
        add_into(rem, std::move(e2), c);
    }
    if (!rem.empty())
        throw inexact_division("input is outside the operator's natural domain");
    return quotient;
}

inline FullPoly mul_by_zsum(const FullPoly& v, int j, int k) {  // (z_j + z_k) * v
    FullPoly r(v.n, v.m);
    for (const auto& [e, c] : v.coeffs) {
        std::vector<int> e2 = e;
        ++e2[static_cast<std::size_t>(j)];
        r.add_term(e2, c);
        e2 = e;
        ++e2[static_cast<std::size_t>(k)];
        r.add_term(e2, c);
    }
    return r;
}

/// All n+m operators of one order applied to q, computed level by level.
inline std::vector<FullPoly> apply_partial_all(int r, const FullPoly& q, const RatFunc& th) {
    if (r < 1) throw bad_input("operator order must be >= 1");
    const int nv = q.nvars();
    std::vector<FullPoly> cur(static_cast<std::size_t>(nv));
    for (int j = 0; j < nv; ++j) cur[static_cast<std::size_t>(j)] = euler_step(q, j, th);
    const RatFunc half(Rat(1, 2));
    for (int order = 2; order <= r; ++order) {
        std::vector<FullPoly> next(static_cast<std::size_t>(nv));
        for (int j = 0; j < nv; ++j) {
            FullPoly acc = euler_step(cur[static_cast<std::size_t>(j)], j, th);
            for (int k = 0; k < nv; ++k) {
                if (k == j) continue;
                FullPoly diff = cur[static_cast<std::size_t>(j)] - cur[static_cast<std::size_t>(k)];
                if (diff.is_zero()) continue;
                FullPoly quot = divide_by_zdiff(mul_by_zsum(diff, j, k), j, k);
                RatFunc coef = -half * (parity(k, q.n) == 0 ? -th : RatFunc(1));
                acc = acc + quot * coef;
            }
            next[static_cast<std::size_t>(j)] = std::move(acc);
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace detail

/// The recursively defined operator of the given order acting in variable j
/// (0-based; z's first, then w's).
inline FullPoly apply_partial(int j, int r, const FullPoly& q, const RatFunc& theta) {
    if (j < 0 || j >= q.nvars()) throw bad_input("variable index out of range");
    return detail::apply_partial_all(r, q, theta)[static_cast<std::size_t>(j)];
}

/// The order-r quantum integral: sum_j (-theta)^{-p(j)} partial^(r)_j.
inline BiSymPoly apply_L(int r, const BiSymPoly& p, const RatFunc& theta) {
    FullPoly q = expand(p);
    auto parts = detail::apply_partial_all(r, q, theta);
    FullPoly acc(q.n, q.m);
    RatFunc winv = -theta.inverse();  // (-theta)^{-1}
    for (int j = 0; j < q.nvars(); ++j) {
        RatFunc coef = detail::parity(j, q.n) == 0 ? RatFunc(1) : winv;
        acc = acc + parts[static_cast<std::size_t>(j)] * coef;
    }
    return symmetrize_back(acc);
}

/// Applies the order-r integral to SP_lambda, asserts exact proportionality,
/// and returns the scalar.
inline RatFunc eigenvalue_of(const Partition& lam, int r, int n, int m, const RatFunc& theta) {
    FatHookParams hp(n, m);
    if (!in_fat_hook(lam, hp)) throw not_in_fat_hook(lam.to_string());
    BiSymPoly sp = super_jack(lam, n, m);
    if (theta.is_constant()) sp = specialize(sp, theta.constant_value());
    if (sp.is_zero()) throw not_in_fat_hook("super-Jack polynomial vanishes");
    BiSymPoly img = apply_L(r, sp, theta);
    RatFunc scalar(0);
    auto lead = sp.coeffs.begin();
    if (auto it = img.coeffs.find(lead->first); it != img.coeffs.end())
        scalar = it->second / lead->second;
    if (!(img == sp * scalar)) throw not_proportional(lam.to_string());
    return scalar;
}

/// Spectral record for one partition: the quasimomentum vector, the shift
/// vector rho, the extracted eigenvalues, and the Hamiltonian eigenvalue
/// (rho, rho)_theta - eig_2.
struct EigenData {
    Partition lambda;
    int n = 0, m = 0;
    std::vector<long> nu;           // (e(lambda + (m^n)), s(lambda))
    std::vector<RatFunc> rho;
    std::map<int, RatFunc> eigenvalues;
    RatFunc h_eigenvalue;
};

inline std::vector<RatFunc> rho_vector(int n, int m, const RatFunc& theta) {
    const int nv = n + m;
    std::vector<RatFunc> rho(static_cast<std::size_t>(nv), RatFunc(0));
    const RatFunc half(Rat(1, 2));
    for (int j = 0; j < nv; ++j) {
        for (int k = j + 1; k < nv; ++k) {
            int e = 1 - detail::parity(j, n) - detail::parity(k, n);
            RatFunc c = half * ratfunc_pow(-theta, e);
            rho[static_cast<std::size_t>(j)] += c;
            rho[static_cast<std::size_t>(k)] -= c;
        }
    }
    return rho;
}

/// (u, v)_theta = sum_{j<=n} u_j v_j - theta sum_k u_{n+k} v_{n+k}.
inline RatFunc indefinite_form(const std::vector<RatFunc>& u, const std::vector<RatFunc>& v,
                               int n, const RatFunc& theta) {
    RatFunc acc(0);
    for (std::size_t j = 0; j < u.size(); ++j) {
        RatFunc t = u[j] * v[j];
        acc += (static_cast<int>(j) < n) ? t : -(theta * t);
    }
    return acc;
}

inline EigenData spectral_data(const Partition& lam, int n, int m, const RatFunc& theta, int r_max) {
    FatHookParams hp(n, m);
    if (!in_fat_hook(lam, hp)) throw not_in_fat_hook(lam.to_string());
    EigenData d;
    d.lambda = lam;
    d.n = n;
    d.m = m;
    Partition rect(std::vector<int>(static_cast<std::size_t>(m > 0 ? n : 0), m));
    Partition shifted = sum_parts(lam, rect);
    Partition e = east(shifted, hp), s = south(lam, hp);
    for (int j = 1; j <= n; ++j) d.nu.push_back(e.part(j));
    for (int k = 1; k <= m; ++k) d.nu.push_back(s.part(k));
    d.rho = rho_vector(n, m, theta);
    for (int r = 1; r <= std::max(r_max, 2); ++r) {
        RatFunc ev = eigenvalue_of(lam, r, n, m, theta);
        if (r == 2) d.h_eigenvalue = indefinite_form(d.rho, d.rho, n, theta) - ev;
        if (r <= r_max) d.eigenvalues.emplace(r, std::move(ev));
    }
    return d;
}

} // namespace sjack
