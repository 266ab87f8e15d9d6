#pragma once

#include <utility>

#include "sjack/jack.hpp"

namespace sjack {

/// Element of C[z,w]^{S_n x S_m} on the basis m_mu(z) m_nu(w), Q(theta) coefficients.
struct BiSymPoly {
    int n = 0, m = 0;
    std::map<std::pair<Partition, Partition>, RatFunc> coeffs;

    BiSymPoly() = default;
    BiSymPoly(int n_, int m_) : n(n_), m(m_) {}
    static BiSymPoly constant(int n, int m, RatFunc c) {
        BiSymPoly p(n, m);
        if (!c.is_zero()) p.coeffs.emplace(std::pair{Partition(), Partition()}, std::move(c));
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    long degree() const {
        long d = 0;
        for (const auto& [k, c] : coeffs) d = std::max(d, k.first.weight() + k.second.weight());
        return d;
    }
    bool homogeneous(long d) const {
        for (const auto& [k, c] : coeffs)
            if (k.first.weight() + k.second.weight() != d) return false;
        return true;
    }
    void add_term(const Partition& mu, const Partition& nu, const RatFunc& c) {
        if (c.is_zero() || mu.length() > n || nu.length() > m) return;
        auto [it, fresh] = coeffs.try_emplace(std::pair{mu, nu}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    bool operator==(const BiSymPoly& o) const { return n == o.n && m == o.m && coeffs == o.coeffs; }
};

inline BiSymPoly operator+(const BiSymPoly& a, const BiSymPoly& b) {
    if (a.n != b.n || a.m != b.m) throw variable_count_mismatch();
    BiSymPoly r = a;
    for (const auto& [k, c] : b.coeffs) r.add_term(k.first, k.second, c);
    return r;
}

inline BiSymPoly operator*(const BiSymPoly& a, const RatFunc& c) {
    BiSymPoly r(a.n, a.m);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.coeffs) r.coeffs.emplace(k, v * c);
    return r;
}

inline BiSymPoly operator-(const BiSymPoly& a, const BiSymPoly& b) { return a + b * RatFunc(-1); }

inline BiSymPoly bisym_mul(const BiSymPoly& a, const BiSymPoly& b) {
    if (a.n != b.n || a.m != b.m) throw variable_count_mismatch();
    BiSymPoly r(a.n, a.m);
    for (const auto& [ka, ca] : a.coeffs) {
        for (const auto& [kb, cb] : b.coeffs) {
            RatFunc c = ca * cb;
            for (const auto& [mz, cz] : monomial_product_table(ka.first, kb.first, a.n))
                for (const auto& [mw, cw] : monomial_product_table(ka.second, kb.second, a.m))
                    r.add_term(mz, mw, c * RatFunc(cz * cw));
        }
    }
    return r;
}

inline BiSymPoly specialize(const BiSymPoly& a, const Rat& theta) {
    BiSymPoly r(a.n, a.m);
    for (const auto& [k, c] : a.coeffs) {
        Rat v = c.evaluate(theta);
        if (v != 0) r.coeffs.emplace(k, RatFunc(v));
    }
    return r;
}

/// p_r(z,w;theta) = sum_j z_j^r - (1/theta) sum_k w_k^r.
inline BiSymPoly deformed_power_sum(int r, int n, int m) {
    if (r < 1) throw bad_input("power sum order must be >= 1");
    BiSymPoly p(n, m);
    if (n >= 1) p.coeffs.emplace(std::pair{Partition{r}, Partition()}, RatFunc(1));
    if (m >= 1) p.coeffs.emplace(std::pair{Partition(), Partition{r}}, -RatFunc::theta_inverse());
    return p;
}

/// The homomorphism sending p_r to the deformed power sum, extended linearly
/// and multiplicatively.
inline BiSymPoly phi(const PowerSumExpr& e, int n, int m) {
    BiSymPoly out(n, m);
    for (const auto& [kappa, c] : e.coeffs) {
        BiSymPoly term = BiSymPoly::constant(n, m, RatFunc(1));
        for (int j = 1; j <= kappa.length() && !term.is_zero(); ++j)
            term = bisym_mul(term, deformed_power_sum(kappa.part(j), n, m));
        for (const auto& [k, v] : term.coeffs) out.add_term(k.first, k.second, c * v);
    }
    return out;
}

/// Super-Jack polynomial SP_lambda(z,w;theta), symbolic theta. Identically zero
/// exactly when lambda lies outside the fat (n,m)-hook.
inline const BiSymPoly& super_jack(const Partition& lam, int n, int m) {
    using Key = std::tuple<Partition, int, int>;
    static detail::Cache<Key, BiSymPoly> cache;
    return cache.get_or_compute(Key{lam, n, m}, [&] { return phi(jack_power_sums(lam), n, m); });
}

/// Expansion of SP_lambda through skew and dual Jack polynomials:
/// sum_mu (-1)^{|mu|} P_{lambda/mu'}(z;theta) Q_mu(w;1/theta), with
/// s(lambda) <= mu <= (lambda'_1, ..., lambda'_m).
inline BiSymPoly super_jack_skew_route(const Partition& lam, int n, int m) {
    FatHookParams hp(n, m);
    if (!in_fat_hook(lam, hp)) throw not_in_fat_hook(lam.to_string());
    BiSymPoly out(n, m);
    Partition lamc = lam.conjugate();
    std::vector<int> topv;
    for (int k = 1; k <= m; ++k)
        if (lamc.part(k) > 0) topv.push_back(lamc.part(k));
    Partition top(std::move(topv));
    Partition s = south(lam, hp);
    for (int w = static_cast<int>(s.weight()); w <= top.weight(); ++w) {
        for (const Partition& mu : partitions_of(w, m, top.empty() ? 0 : top.part(1))) {
            if (!contains(s, mu) || !contains(mu, top)) continue;
            SymPoly skew = skew_jack(lam, mu.conjugate(), n);
            if (skew.is_zero()) continue;
            RatFunc qb = b_coeff(mu).substitute_inverse() * RatFunc(mu.weight() % 2 == 0 ? 1 : -1);
            for (const auto& [kw, cw] : jack(mu, m).coeffs) {
                RatFunc cq = cw.substitute_inverse() * qb;
                for (const auto& [kz, cz] : skew.coeffs) out.add_term(kz, kw, cz * cq);
            }
        }
    }
    return out;
}

/// Checks SP_lambda(z,w;theta) = (-1)^{|lambda|} SQ_{lambda'}(w,z;1/theta)
/// with SQ := phi(Q) as exact coefficient maps.
inline bool super_jack_dual_check(const Partition& lam, int n, int m) {
    const BiSymPoly& sp = super_jack(lam, n, m);
    const BiSymPoly& dual = super_jack(lam.conjugate(), m, n);
    RatFunc scale = b_coeff(lam.conjugate()).substitute_inverse() *
                    RatFunc(lam.weight() % 2 == 0 ? 1 : -1);
    BiSymPoly rhs(n, m);
    for (const auto& [k, c] : dual.coeffs)
        rhs.add_term(k.second, k.first, c.substitute_inverse() * scale);
    return sp == rhs;
}

/// Quasi-invariance: (d/dz_1 + theta d/dw_1) p vanishes identically on z_1 = w_1.
/// Checked exactly at a rational theta; symmetry makes the (1,1) pair sufficient.
inline bool quasi_invariance_check(const BiSymPoly& p, const Rat& theta) {
    if (p.n < 1 || p.m < 1) throw bad_input("quasi-invariance needs n >= 1 and m >= 1");
    // full expansion with coefficients at theta
    std::map<std::vector<int>, Rat> full;
    for (const auto& [k, c] : p.coeffs) {
        Rat v = c.evaluate(theta);
        if (v == 0) continue;
        for (const auto& ez : orbit_vectors(k.first, p.n)) {
            for (const auto& ew : orbit_vectors(k.second, p.m)) {
                std::vector<int> e = ez;
                e.insert(e.end(), ew.begin(), ew.end());
                auto [it, fresh] = full.try_emplace(std::move(e), v);
                if (!fresh) it->second += v;
            }
        }
    }
    // apply d/dz_1 + theta d/dw_1, then substitute w_1 = z_1
    std::map<std::vector<int>, Rat> res;
    auto accumulate = [&](std::vector<int> e, const Rat& c) {
        if (c == 0) return;
        e[0] += e[static_cast<std::size_t>(p.n)];
        e[static_cast<std::size_t>(p.n)] = 0;
        auto [it, fresh] = res.try_emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) res.erase(it);
        }
    };
    for (const auto& [e, c] : full) {
        if (e[0] > 0) {
            std::vector<int> d = e;
            --d[0];
            accumulate(std::move(d), c * e[0]);
        }
        if (e[static_cast<std::size_t>(p.n)] > 0) {
            std::vector<int> d = e;
            --d[static_cast<std::size_t>(p.n)];
            accumulate(std::move(d), theta * c * e[static_cast<std::size_t>(p.n)]);
        }
    }
    return res.empty();
}

/// Rank test over Q(theta) for the coefficient vectors of the given polynomials.
inline bool linearly_independent(const std::vector<BiSymPoly>& polys) {
    if (polys.empty()) return true;
    std::map<std::pair<Partition, Partition>, int> keyindex;
    for (const auto& p : polys)
        for (const auto& [k, c] : p.coeffs) keyindex.try_emplace(k, 0);
    int idx = 0;
    for (auto& [k, i] : keyindex) i = idx++;
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& p : polys) {
        std::vector<RatFunc> row(keyindex.size());
        for (const auto& [k, c] : p.coeffs) row[static_cast<std::size_t>(keyindex.at(k))] = c;
        rows.push_back(std::move(row));
    }
    // Gaussian elimination over the fraction field
    std::size_t rank = 0;
    for (std::size_t col = 0; col < keyindex.size() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            RatFunc f = rows[r][col] / rows[rank][col];
            for (std::size_t j = col; j < keyindex.size(); ++j)
                rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank == rows.size();
}

} // namespace sjack
