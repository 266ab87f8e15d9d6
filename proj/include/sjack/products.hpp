#pragma once

#include <optional>
#include <string>

#include "sjack/cmsops.hpp"

namespace sjack {

/// Full Laurent expansion of a bisymmetric polynomial with coefficients
/// evaluated at a rational theta; exponents negated when invert is set.
inline Laurent bisym_to_laurent(const BiSymPoly& p, const Rat& theta, bool invert = false) {
    Laurent r(p.n + p.m);
    for (const auto& [k, c] : p.coeffs) {
        Rat v = c.evaluate(theta);
        if (v == 0) continue;
        for (const auto& ez : orbit_vectors(k.first, p.n)) {
            for (const auto& ew : orbit_vectors(k.second, p.m)) {
                std::vector<int> e = ez;
                e.insert(e.end(), ew.begin(), ew.end());
                if (invert)
                    for (auto& x : e) x = -x;
                r.add_term(e, v);
            }
        }
    }
    return r;
}

/// The conjugate p*(z,w) = p(1/z, 1/w) for real (rational-theta) coefficients.
inline Laurent conjugate_star(const BiSymPoly& p, const ThetaValue& theta) {
    if (theta.is_symbolic())
        throw symbolic_theta_not_allowed("conjugation needs a specialized theta");
    return bisym_to_laurent(p, theta.value(), /*invert=*/true);
}

namespace detail {

inline long total_z_degree(const std::vector<int>& e, int n) {
    long s = 0;
    for (int j = 0; j < n; ++j) s += e[static_cast<std::size_t>(j)];
    return s;
}

/// prod_{j,k} (1 - z_j/w_k)^{-2} expanded as sum_{t>=0} (t+1)(z_j/w_k)^t and
/// truncated to total z-degree <= T.
inline Laurent geometric_factor(int n, int m, long T) {
    Laurent g = Laurent::constant(n + m, Rat(1));
    if (T < 0) return Laurent(n + m);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < m; ++k) {
            Laurent s(n + m);
            std::vector<int> e(static_cast<std::size_t>(n + m), 0);
            for (long t = 0; t <= T; ++t) {
                e[static_cast<std::size_t>(j)] = static_cast<int>(t);
                e[static_cast<std::size_t>(n + k)] = static_cast<int>(-t);
                s.add_term(e, Rat(t + 1));
            }
            Laurent next(n + m);
            for (const auto& [ea, ca] : g.terms) {
                long za = total_z_degree(ea, n);
                for (const auto& [eb, cb] : s.terms) {
                    long zb = total_z_degree(eb, n);
                    if (za + zb > T) break;  // s terms are ordered by ascending z_j power
                    std::vector<int> esum = ea;
                    for (std::size_t i = 0; i < esum.size(); ++i) esum[i] += eb[i];
                    next.add_term(esum, ca * cb);
                }
            }
            g = std::move(next);
        }
    }
    return g;
}

/// Lift an n-variable Laurent factor into n+m variables at a block offset.
inline Laurent lift_block(const Laurent& a, int nvars, int offset) {
    Laurent r(nvars);
    for (const auto& [e, c] : a.terms) {
        std::vector<int> f(static_cast<std::size_t>(nvars), 0);
        std::copy(e.begin(), e.end(), f.begin() + offset);
        r.terms.emplace(std::move(f), c);
    }
    return r;
}

} // namespace detail

/// The Hermitian torus product at theta = 1, evaluated exactly by constant-term
/// extraction: (1/(n! m!)) CT[p q* Delta_{n,m}] with the cross factor written as
/// (-1)^{nm} (z_1...z_n)^m (w_1...w_m)^{-n} Delta_n Delta_m prod (1 - z_j/w_k)^{-2}
/// and each inverse square expanded as a geometric series. The series is cut at
/// the total z-degree window of the rest of the integrand, beyond which no term
/// can reach the constant term.
inline Rat super_inner_exact(const BiSymPoly& p, const BiSymPoly& q, int n, int m) {
    if (p.n != n || p.m != m || q.n != n || q.m != m) throw variable_count_mismatch();
    const Rat one(1);
    Laurent r = laurent_mul(bisym_to_laurent(p, one), bisym_to_laurent(q, one, /*invert=*/true));
    if (r.is_zero()) return Rat(0);
    if (n > 1) r = laurent_mul(r, detail::lift_block(macdonald_weight_laurent(n, 1), n + m, 0));
    if (m > 1) r = laurent_mul(r, detail::lift_block(macdonald_weight_laurent(m, 1), n + m, n));
    {
        std::vector<int> pre(static_cast<std::size_t>(n + m));
        for (int j = 0; j < n; ++j) pre[static_cast<std::size_t>(j)] = m;
        for (int k = 0; k < m; ++k) pre[static_cast<std::size_t>(n + k)] = -n;
        Laurent shift(n + m);
        shift.terms.emplace(std::move(pre), one);
        r = laurent_mul(r, shift);
    }
    long lo = 0;
    bool first = true;
    for (const auto& [e, c] : r.terms) {
        long z = detail::total_z_degree(e, n);
        lo = first ? z : std::min(lo, z);
        first = false;
    }
    if (lo > 0) return Rat(0);
    Laurent g = detail::geometric_factor(n, m, -lo);
    Rat acc(0);
    std::vector<int> neg(static_cast<std::size_t>(n + m));
    for (const auto& [e, c] : r.terms) {
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -e[i];
        auto it = g.terms.find(neg);
        if (it != g.terms.end()) acc += c * it->second;
    }
    if ((n * m) % 2 != 0) acc = -acc;
    acc /= Rat(factorial(n) * factorial(m));
    return acc;
}

/// N_{n,m}(lambda; theta) normalized by N_n(empty; theta) N_m(empty; 1/theta),
/// as an element of Q(theta); identically zero when (m^n) is not contained.
inline RatFunc norm_super_ratio(const Partition& lam, int n, int m) {
    FatHookParams hp(n, m);
    if (!in_fat_hook(lam, hp)) throw not_in_fat_hook(lam.to_string());
    if (!contains_rectangle(lam, hp)) return RatFunc(0);
    Partition e = east(lam, hp), s = south(lam, hp);
    return norm_jack_ratio(e, n) * norm_jack_ratio(s, m).substitute_inverse() *
           b_coeff(e) * b_coeff(s).substitute_inverse() / b_coeff(lam);
}

/// N_{n,m}(lambda; theta) as a float, positive exactly when (m^n) is contained.
inline double norm_super_numeric(const Partition& lam, int n, int m, const Rat& theta) {
    FatHookParams hp(n, m);
    if (!in_fat_hook(lam, hp)) throw not_in_fat_hook(lam.to_string());
    if (!contains_rectangle(lam, hp)) return 0.0;
    Partition e = east(lam, hp), s = south(lam, hp);
    double th = rat_to_double(theta);
    Rat b = b_coeff_at(e, theta) * b_coeff(s).substitute_inverse().evaluate(theta) /
            b_coeff_at(lam, theta);
    return norm_jack_numeric(e, n, th) * norm_jack_numeric(s, m, 1.0 / th) * rat_to_double(b);
}

/// Exact absolute norm at theta = 1 (all Gamma arguments are integers).
inline Rat norm_super_exact_theta1(const Partition& lam, int n, int m) {
    FatHookParams hp(n, m);
    if (!in_fat_hook(lam, hp)) throw not_in_fat_hook(lam.to_string());
    if (!contains_rectangle(lam, hp)) return Rat(0);
    Partition e = east(lam, hp), s = south(lam, hp);
    Rat one(1);
    Rat b = b_coeff_at(e, one) * b_coeff_at(s, one) / b_coeff_at(lam, one);
    return norm_jack_exact_int(e, n, 1) * norm_jack_exact_int(s, m, 1) * b;
}

/// Kernel index set: lambda in the fat hook with |lambda| <= d not containing
/// the rectangle; spans the kernel of the product.
inline std::vector<Partition> kernel_basis(const FatHookParams& hp, int d) {
    std::vector<Partition> out;
    for (const auto& lam : enumerate_fat_hook(hp, d))
        if (!contains_rectangle(lam, hp)) out.push_back(lam);
    return out;
}

/// N_{n,m}(lambda; theta) = b_{lambda'}(1/theta)^2 N_{m,n}(lambda'; 1/theta),
/// verified as an identity in Q(theta) (both sides in ratio normalization).
inline bool norm_duality_check(const Partition& lam, int n, int m) {
    RatFunc lhs = norm_super_ratio(lam, n, m);
    RatFunc binv = b_coeff(lam.conjugate()).substitute_inverse();
    RatFunc rhs = binv * binv * norm_super_ratio(lam.conjugate(), m, n).substitute_inverse();
    return lhs == rhs;
}

/// Gram matrix of a super-Jack family with method metadata and error summaries.
struct GramReport {
    std::string method;  // "exact-ct" | "quadrature" | "monte-carlo"
    int n = 0, m = 0, degree = 0;
    std::string theta;
    bool cumulative = false;  // index over |lambda| <= degree instead of == degree
    std::vector<Partition> index;
    std::vector<std::vector<Rat>> exact_values;
    std::vector<std::vector<double>> numeric_values;
    double max_offdiag_abs = 0.0;
    std::vector<double> diag_vs_formula;  // relative errors against the norm formula
    // quadrature parameters, echoed when applicable
    double xi = 0.0, xi_prime = 0.0;
    long grid = 0, mc_samples = 0;
    unsigned long seed = 0;

    void finalize_errors(const std::vector<double>& formula_diag) {
        max_offdiag_abs = 0.0;
        diag_vs_formula.clear();
        auto value = [&](std::size_t i, std::size_t j) {
            return exact_values.empty() ? numeric_values[i][j] : rat_to_double(exact_values[i][j]);
        };
        for (std::size_t i = 0; i < index.size(); ++i) {
            for (std::size_t j = 0; j < index.size(); ++j) {
                if (i != j) max_offdiag_abs = std::max(max_offdiag_abs, std::abs(value(i, j)));
            }
            double f = formula_diag[i];
            double err = std::abs(value(i, i) - f) / (f != 0.0 ? std::abs(f) : 1.0);
            diag_vs_formula.push_back(err);
        }
    }
};

/// Exact Gram matrix: theta = 1 through the constant-term product for any
/// (n, m); other integer theta supported in the classical m = 0 case.
inline GramReport gram_exact(const FatHookParams& hp, int d, const ThetaValue& theta,
                             bool cumulative = false) {
    if (theta.is_symbolic()) throw symbolic_theta_not_allowed("exact Gram needs rational theta");
    GramReport rep;
    rep.method = "exact-ct";
    rep.n = hp.n;
    rep.m = hp.m;
    rep.degree = d;
    rep.cumulative = cumulative;
    rep.theta = theta.value().get_str();
    rep.index = cumulative ? enumerate_fat_hook(hp, d) : fat_hook_of_weight(hp, d);
    const std::size_t sz = rep.index.size();
    rep.exact_values.assign(sz, std::vector<Rat>(sz, Rat(0)));
    std::vector<double> formula(sz, 0.0);
    const bool theta_one = theta.value() == 1;
    long th_int = 0;
    if (!theta_one) {
        if (hp.m != 0 || theta.value().get_den() != 1)
            throw theta_not_one("exact Gram away from theta = 1 needs m = 0 and integer theta");
        th_int = theta.value().get_num().get_si();
    }
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = i; j < sz; ++j) {
            Rat v;
            if (theta_one) {
                v = super_inner_exact(super_jack(rep.index[i], hp.n, hp.m),
                                      super_jack(rep.index[j], hp.n, hp.m), hp.n, hp.m);
            } else {
                v = macdonald_inner_exact(jack(rep.index[i], hp.n), jack(rep.index[j], hp.n), th_int);
            }
            rep.exact_values[i][j] = v;
            rep.exact_values[j][i] = v;
        }
        formula[i] = theta_one ? rat_to_double(norm_super_exact_theta1(rep.index[i], hp.n, hp.m))
                               : rat_to_double(norm_jack_exact_int(rep.index[i], hp.n, th_int));
    }
    rep.finalize_errors(formula);
    return rep;
}

} // namespace sjack
