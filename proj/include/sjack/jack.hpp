#pragma once

#include <cmath>
#include <utility>

#include "sjack/laurent.hpp"

namespace sjack {

namespace detail {

/// Jack polynomials of one homogeneous degree, built once with symbolic theta
/// by Gram-Schmidt over the monomial basis in a linear extension of the
/// dominance order (lex ascending), orthogonalizing with the power-sum pairing.
struct JackDegreeData {
    std::map<Partition, std::vector<RatFunc>> p_vectors;    // P_lambda in the p-basis
    std::map<Partition, std::map<Partition, RatFunc>> m_expansions;
    std::map<Partition, RatFunc> oracle_norms;              // <P_lambda, P_lambda>
};

inline const JackDegreeData& jack_degree_data(int d) {
    static Cache<int, JackDegreeData> cache;
    return cache.get_or_compute(d, [&] {
        const BasisTransition& t = basis_transition(d);
        const std::size_t sz = t.parts.size();
        // diagonal weights of the pairing: z_kappa * t^{-l(kappa)}
        std::vector<RatFunc> w(sz);
        for (std::size_t i = 0; i < sz; ++i)
            w[i] = RatFunc(IntPoly(z_lambda(t.parts[i])),
                           IntPoly::monomial(Int(1), t.parts[i].length()));
        auto pair = [&](const std::vector<RatFunc>& x, const std::vector<RatFunc>& y) {
            RatFunc acc(0);
            for (std::size_t i = 0; i < sz; ++i)
                if (!x[i].is_zero() && !y[i].is_zero()) acc += x[i] * y[i] * w[i];
            return acc;
        };
        JackDegreeData data;
        std::vector<const Partition*> done;
        for (auto it = t.parts.rbegin(); it != t.parts.rend(); ++it) {  // lex ascending
            const Partition& lam = *it;
            std::vector<RatFunc> x(sz);
            const auto& row = t.m_to_p[static_cast<std::size_t>(t.index.at(lam))];
            for (std::size_t i = 0; i < sz; ++i) x[i] = RatFunc(row[i]);
            for (const Partition* mu : done) {
                const auto& pm = data.p_vectors.at(*mu);
                RatFunc c = pair(x, pm) / data.oracle_norms.at(*mu);
                if (c.is_zero()) continue;
                for (std::size_t i = 0; i < sz; ++i)
                    if (!pm[i].is_zero()) x[i] -= c * pm[i];
            }
            data.oracle_norms.emplace(lam, pair(x, x));
            std::map<Partition, RatFunc> mexp;
            for (std::size_t nu = 0; nu < sz; ++nu) {
                RatFunc c(0);
                for (std::size_t i = 0; i < sz; ++i)
                    if (!x[i].is_zero() && t.p_to_m[i][nu] != 0)
                        c += x[i] * RatFunc(t.p_to_m[i][nu]);
                if (!c.is_zero()) mexp.emplace(t.parts[nu], std::move(c));
            }
            data.m_expansions.emplace(lam, std::move(mexp));
            data.p_vectors.emplace(lam, std::move(x));
            done.push_back(&lam);
        }
        return data;
    });
}

} // namespace detail

/// Monomial expansion of the Jack symmetric function P_lambda (all partitions
/// of |lambda| as potential keys; restriction to n variables drops long keys).
inline const std::map<Partition, RatFunc>& jack_monomial_expansion(const Partition& lam) {
    return detail::jack_degree_data(static_cast<int>(lam.weight())).m_expansions.at(lam);
}

inline PowerSumExpr jack_power_sums(const Partition& lam) {
    const auto& t = detail::basis_transition(static_cast<int>(lam.weight()));
    const auto& x = detail::jack_degree_data(static_cast<int>(lam.weight())).p_vectors.at(lam);
    PowerSumExpr e;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) e.coeffs.emplace(t.parts[i], x[i]);
    return e;
}

/// <P_lambda, P_lambda> under the power-sum pairing (equals 1/b_lambda).
inline const RatFunc& jack_oracle_norm(const Partition& lam) {
    return detail::jack_degree_data(static_cast<int>(lam.weight())).oracle_norms.at(lam);
}

/// The monic Jack polynomial P_lambda in n variables, symbolic theta.
inline SymPoly jack(const Partition& lam, int n) {
    if (lam.length() > n) throw length_exceeds_n(lam.to_string());
    SymPoly p(n);
    for (const auto& [k, c] : jack_monomial_expansion(lam))
        if (k.length() <= n) p.coeffs.emplace(k, c);
    return p;
}

/// Q_lambda = b_lambda * P_lambda.
inline SymPoly jack_Q(const Partition& lam, int n) { return jack(lam, n) * b_coeff(lam); }

/// Expansion P_mu P_nu = sum_lambda f^lambda_{mu nu} P_lambda, as a map on lambda.
inline const std::map<Partition, RatFunc>& f_expansion(const Partition& mu, const Partition& nu) {
    using Key = std::pair<Partition, Partition>;
    static detail::Cache<Key, std::map<Partition, RatFunc>> cache;
    const Partition& a = mu <= nu ? mu : nu;
    const Partition& b = mu <= nu ? nu : mu;
    return cache.get_or_compute(Key{a, b}, [&] {
        const int d = static_cast<int>(a.weight() + b.weight());
        const int nv = std::max(1, d);
        SymPoly prod = sym_mul(jack(a, nv), jack(b, nv));
        std::map<Partition, RatFunc> f;
        for (const Partition& kappa : detail::basis_transition(d).parts) {  // lex descending
            auto it = prod.coeffs.find(kappa);
            if (it == prod.coeffs.end() || it->second.is_zero()) continue;
            RatFunc c = it->second;
            for (const auto& [k, v] : jack_monomial_expansion(kappa))
                prod.add_term(k, -(c * v));
            f.emplace(kappa, std::move(c));
        }
        if (!prod.is_zero()) throw error("Jack-basis reduction left a remainder");
        return f;
    });
}

/// Coefficient of P_lambda in P_mu P_nu; zero outside the support.
inline RatFunc f_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.weight() != mu.weight() + nu.weight()) return RatFunc(0);
    const auto& f = f_expansion(mu, nu);
    auto it = f.find(lam);
    return it == f.end() ? RatFunc(0) : it->second;
}

/// Skew Jack polynomial P_{lambda/mu} in n variables:
/// sum_nu f^{lambda'}_{mu' nu'}(1/theta) P_nu(theta).
inline SymPoly skew_jack(const Partition& lam, const Partition& mu, int n) {
    SymPoly out(n);
    if (!contains(mu, lam)) return out;
    const int d = static_cast<int>(lam.weight() - mu.weight());
    Partition lamc = lam.conjugate(), muc = mu.conjugate();
    for (const Partition& nu : partitions_of(d)) {
        if (nu.length() > n) continue;  // P_nu vanishes in n variables
        RatFunc f = f_coeff(lamc, muc, nu.conjugate()).substitute_inverse();
        if (f.is_zero()) continue;
        for (const auto& [k, c] : jack(nu, n).coeffs) out.add_term(k, f * c);
    }
    return out;
}

/// Constant-term form of Macdonald's product on the torus, exact for integer
/// theta: (1/n!) CT[p(z) q(1/z) Delta_n(z; theta)].
inline Rat macdonald_inner_exact(const SymPoly& p, const SymPoly& q, long theta) {
    if (theta < 1) throw non_integer_theta("need integer theta >= 1");
    if (p.n != q.n) throw variable_count_mismatch();
    Rat th(theta);
    Laurent a = laurent_mul(sympoly_to_laurent(p, th), macdonald_weight_laurent(p.n, theta));
    Rat ct = constant_pairing(a, sympoly_to_laurent(q, th));
    return ct / Rat(factorial(p.n));
}

/// N_n(lambda; theta) / N_n(empty; theta) as an element of Q(theta). Each
/// Gamma-argument difference between lambda and the empty partition is the
/// integer lambda_j - lambda_k, so the ratio telescopes into linear factors.
inline RatFunc norm_jack_ratio(const Partition& lam, int n) {
    if (lam.length() > n) throw length_exceeds_n(lam.to_string());
    auto linear = [](long a, long b) {  // a + b*t
        return RatFunc(IntPoly(std::vector<Int>{Int(a), Int(b)}));
    };
    RatFunc r(1);
    for (int j = 1; j < n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            long delta = lam.part(j) - lam.part(k);
            for (long i = 0; i < delta; ++i) {
                r *= linear(i, k - j + 1) * linear(i + 1, k - j - 1);
                r /= linear(i, k - j) * linear(i + 1, k - j);
            }
        }
    }
    return r;
}

/// N_n(lambda; theta) via log-Gamma.
inline double norm_jack_numeric(const Partition& lam, int n, double theta) {
    if (lam.length() > n) throw length_exceeds_n(lam.to_string());
    double s = 0;
    for (int j = 1; j < n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            double delta = lam.part(j) - lam.part(k);
            s += std::lgamma(delta + theta * (k - j + 1)) + std::lgamma(delta + theta * (k - j - 1) + 1);
            s -= std::lgamma(delta + theta * (k - j)) + std::lgamma(delta + theta * (k - j) + 1);
        }
    }
    return std::exp(s);
}

/// N_n(lambda; theta) as an exact rational; integer theta keeps all Gamma
/// arguments at positive integers.
inline Rat norm_jack_exact_int(const Partition& lam, int n, long theta) {
    if (theta < 1) throw non_integer_theta("need integer theta >= 1");
    if (lam.length() > n) throw length_exceeds_n(lam.to_string());
    auto gam = [](long k) {
        if (k < 1) throw error("Gamma argument must be a positive integer");
        return factorial(k - 1);
    };
    Rat r(1);
    for (int j = 1; j < n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            long delta = lam.part(j) - lam.part(k);
            r *= Rat(gam(delta + theta * (k - j + 1)) * gam(delta + theta * (k - j - 1) + 1));
            r /= Rat(gam(delta + theta * (k - j)) * gam(delta + theta * (k - j) + 1));
        }
    }
    r.canonicalize();
    return r;
}

} // namespace sjack
