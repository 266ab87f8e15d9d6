#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "sjack/partition.hpp"

namespace sjack {

namespace detail {

/// Mutex-guarded memo table; safe for concurrent read/insert.
template <class K, class V>
class Cache {
public:
    template <class F>
    const V& get_or_compute(const K& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        V value = compute();  // outside the lock: computations may recurse into the cache
        std::lock_guard<std::mutex> lk(mu_);
        return map_.emplace(key, std::move(value)).first->second;
    }

private:
    std::map<K, V> map_;
    std::mutex mu_;
};

} // namespace detail

/// All distinct permutations of lambda padded with zeros to length n.
/// Requires length(lambda) <= n.
inline std::vector<std::vector<int>> orbit_vectors(const Partition& lam, int n) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    std::copy(lam.parts().begin(), lam.parts().end(), v.begin());
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do { out.push_back(v); } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline long orbit_size(const Partition& lam, int n) {
    // n! / (multiplicities! * (n - length)!)
    Int num = factorial(n);
    Int den = factorial(n - lam.length());
    int run = 1;
    for (int j = 2; j <= lam.length() + 1; ++j) {
        if (j <= lam.length() && lam.part(j) == lam.part(j - 1)) { ++run; continue; }
        den *= factorial(run);
        run = 1;
    }
    Int q = num / den;
    return q.get_si();
}

/// m_alpha * m_beta in n variables as integer multiplicities of m_gamma.
inline const std::map<Partition, long>& monomial_product_table(const Partition& alpha,
                                                               const Partition& beta, int n) {
    using Key = std::tuple<Partition, Partition, int>;
    static detail::Cache<Key, std::map<Partition, long>> cache;
    const Partition& a = alpha <= beta ? alpha : beta;
    const Partition& b = alpha <= beta ? beta : alpha;
    return cache.get_or_compute(Key{a, b, n}, [&] {
        std::map<Partition, long> out;
        if (a.length() > n || b.length() > n) return out;
        auto oa = orbit_vectors(a, n);
        auto ob = orbit_vectors(b, n);
        std::vector<int> s(static_cast<std::size_t>(n));
        for (const auto& va : oa) {
            for (const auto& vb : ob) {
                bool sorted = true;
                for (int i = 0; i < n; ++i) {
                    s[static_cast<std::size_t>(i)] = va[static_cast<std::size_t>(i)] + vb[static_cast<std::size_t>(i)];
                    if (i > 0 && s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(i - 1)]) { sorted = false; break; }
                }
                if (sorted) ++out[Partition(s)];
            }
        }
        return out;
    });
}

/// Symmetric polynomial in n variables, monomial basis, Q(theta) coefficients.
struct SymPoly {
    int n = 0;
    std::map<Partition, RatFunc> coeffs;

    SymPoly() = default;
    explicit SymPoly(int n_) : n(n_) {}
    static SymPoly constant(int n, RatFunc c) {
        SymPoly p(n);
        if (!c.is_zero()) p.coeffs.emplace(Partition(), std::move(c));
        return p;
    }
    static SymPoly monomial(int n, const Partition& lam, RatFunc c = RatFunc(1)) {
        SymPoly p(n);
        if (lam.length() > n) throw length_exceeds_n(lam.to_string());
        if (!c.is_zero()) p.coeffs.emplace(lam, std::move(c));
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const Partition& key, const RatFunc& c) {
        if (c.is_zero() || key.length() > n) return;
        auto [it, fresh] = coeffs.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    bool operator==(const SymPoly& o) const { return n == o.n && coeffs == o.coeffs; }
};

inline SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    if (a.n != b.n) throw variable_count_mismatch();
    SymPoly r = a;
    for (const auto& [k, c] : b.coeffs) r.add_term(k, c);
    return r;
}

inline SymPoly operator*(const SymPoly& a, const RatFunc& c) {
    SymPoly r(a.n);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.coeffs) r.coeffs.emplace(k, v * c);
    return r;
}

inline SymPoly operator-(const SymPoly& a, const SymPoly& b) { return a + b * RatFunc(-1); }

/// Exact product, re-expanded in the monomial basis.
inline SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
    if (a.n != b.n) throw variable_count_mismatch();
    SymPoly r(a.n);
    for (const auto& [ka, ca] : a.coeffs) {
        for (const auto& [kb, cb] : b.coeffs) {
            RatFunc c = ca * cb;
            for (const auto& [kg, mult] : monomial_product_table(ka, kb, a.n))
                r.add_term(kg, c * RatFunc(mult));
        }
    }
    return r;
}

/// Restriction to fewer variables: drop keys longer than n_new.
inline SymPoly restrict_vars(const SymPoly& a, int n_new) {
    SymPoly r(n_new);
    for (const auto& [k, c] : a.coeffs)
        if (k.length() <= n_new) r.coeffs.emplace(k, c);
    return r;
}

inline SymPoly specialize(const SymPoly& a, const Rat& theta) {
    SymPoly r(a.n);
    for (const auto& [k, c] : a.coeffs) {
        Rat v = c.evaluate(theta);
        if (v != 0) r.coeffs.emplace(k, RatFunc(v));
    }
    return r;
}

/// Formal polynomial in the power sums: key lambda stands for p_{lambda_1} p_{lambda_2} ...
struct PowerSumExpr {
    std::map<Partition, RatFunc> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const Partition& key, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    bool operator==(const PowerSumExpr& o) const { return coeffs == o.coeffs; }
};

/// z_lambda = prod_i i^{m_i} m_i! (centralizer size).
inline Int z_lambda(const Partition& lam) {
    Int z = 1;
    int run = 0;
    for (int j = 1; j <= lam.length() + 1; ++j) {
        if (j <= lam.length() && j > 1 && lam.part(j) == lam.part(j - 1)) { ++run; continue; }
        if (j > 1) {
            Int p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(lam.part(j - 1)),
                          static_cast<unsigned long>(run));
            z *= p * factorial(run);
        }
        run = 1;
    }
    return z;
}

/// The deformed combinatorial pairing <p_lambda, p_mu> = delta * z_lambda * theta^{-l(lambda)}.
inline RatFunc oracle_inner(const PowerSumExpr& e1, const PowerSumExpr& e2) {
    RatFunc acc(0);
    for (const auto& [k, c1] : e1.coeffs) {
        auto it = e2.coeffs.find(k);
        if (it == e2.coeffs.end()) continue;
        acc += c1 * it->second * RatFunc(IntPoly(z_lambda(k)), IntPoly::monomial(Int(1), k.length()));
    }
    return acc;
}

/// omega automorphism with parameter: p_r -> (-1)^{r-1} * theta_param * p_r,
/// extended multiplicatively. Pass RatFunc::theta() for omega_theta,
/// RatFunc::theta_inverse() for omega_{1/theta}.
inline PowerSumExpr omega_auto(const PowerSumExpr& e, const RatFunc& theta_param) {
    PowerSumExpr r;
    for (const auto& [k, c] : e.coeffs) {
        long sign = ((k.weight() - k.length()) % 2 == 0) ? 1 : -1;
        r.add_term(k, c * RatFunc(sign) * ratfunc_pow(theta_param, k.length()));
    }
    return r;
}

inline PowerSumExpr substitute_inverse(const PowerSumExpr& e) {
    PowerSumExpr r;
    for (const auto& [k, c] : e.coeffs) r.coeffs.emplace(k, c.substitute_inverse());
    return r;
}

namespace detail {

/// Per-degree data for the abstract ring realized in d variables:
/// the integer matrix p_mu = sum_nu M[mu][nu] m_nu and its inverse over Q.
struct BasisTransition {
    std::vector<Partition> parts;            // partitions of d, lex descending
    std::map<Partition, int> index;
    std::vector<std::vector<Rat>> p_to_m;    // M
    std::vector<std::vector<Rat>> m_to_p;    // M^{-1}
};

inline const BasisTransition& basis_transition(int d) {
    static Cache<int, BasisTransition> cache;
    return cache.get_or_compute(d, [&] {
        BasisTransition t;
        t.parts = partitions_of(d);
        const int sz = static_cast<int>(t.parts.size());
        for (int i = 0; i < sz; ++i) t.index.emplace(t.parts[static_cast<std::size_t>(i)], i);
        const int nv = std::max(1, d);
        t.p_to_m.assign(static_cast<std::size_t>(sz), std::vector<Rat>(static_cast<std::size_t>(sz), Rat(0)));
        for (int i = 0; i < sz; ++i) {
            const Partition& mu = t.parts[static_cast<std::size_t>(i)];
            // expand p_mu = prod_r m_(r) in nv variables
            std::map<Partition, Rat> acc{{Partition(), Rat(1)}};
            for (int j = 1; j <= mu.length(); ++j) {
                std::map<Partition, Rat> next;
                Partition pr{mu.part(j)};
                for (const auto& [k, c] : acc)
                    for (const auto& [kg, mult] : monomial_product_table(k, pr, nv))
                        next[kg] += c * mult;
                acc = std::move(next);
            }
            for (const auto& [k, c] : acc)
                t.p_to_m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t.index.at(k))] = c;
        }
        // invert by Gauss-Jordan over Q
        auto a = t.p_to_m;
        t.m_to_p.assign(static_cast<std::size_t>(sz), std::vector<Rat>(static_cast<std::size_t>(sz), Rat(0)));
        for (int i = 0; i < sz; ++i) t.m_to_p[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int col = 0; col < sz; ++col) {
            int piv = col;
            while (piv < sz && a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
            if (piv == sz) throw error("singular power-sum transition matrix");
            std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
            std::swap(t.m_to_p[static_cast<std::size_t>(piv)], t.m_to_p[static_cast<std::size_t>(col)]);
            Rat d0 = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int j = 0; j < sz; ++j) {
                a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= d0;
                t.m_to_p[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= d0;
            }
            for (int row = 0; row < sz; ++row) {
                if (row == col) continue;
                Rat f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
                if (f == 0) continue;
                for (int j = 0; j < sz; ++j) {
                    a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                    t.m_to_p[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -= f * t.m_to_p[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                }
            }
        }
        return t;
    });
}

} // namespace detail

/// Canonical lift to the power-sum basis. For degrees <= n this inverts
/// from_power_sums; beyond that the lift treats each m_lambda key abstractly.
inline PowerSumExpr to_power_sums(const SymPoly& a) {
    PowerSumExpr out;
    std::map<int, std::map<Partition, RatFunc>> by_degree;
    for (const auto& [k, c] : a.coeffs) by_degree[static_cast<int>(k.weight())].emplace(k, c);
    for (const auto& [d, block] : by_degree) {
        const auto& t = detail::basis_transition(d);
        for (const auto& [nu, c] : block) {
            const auto& row = t.m_to_p[static_cast<std::size_t>(t.index.at(nu))];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) out.add_term(t.parts[j], c * RatFunc(row[j]));
        }
    }
    return out;
}

inline SymPoly from_power_sums(const PowerSumExpr& e, int n) {
    SymPoly out(n);
    for (const auto& [mu, c] : e.coeffs) {
        SymPoly term = SymPoly::constant(n, c);
        for (int j = 1; j <= mu.length(); ++j) {
            if (n == 0) { term = SymPoly(0); break; }
            term = sym_mul(term, SymPoly::monomial(n, Partition{mu.part(j)}));
        }
        for (const auto& [k, v] : term.coeffs) out.add_term(k, v);
    }
    return out;
}

} // namespace sjack
