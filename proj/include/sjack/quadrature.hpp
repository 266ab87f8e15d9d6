#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <thread>

#include "sjack/products.hpp"

namespace sjack {

using Complex = std::complex<double>;

/// Numerical integration parameters for the torus product.
struct QuadConfig {
    double xi = 1.0;
    double xi_prime = 2.0;
    long grid = 256;         // points per angle (trapezoid)
    long mc_samples = 16384; // Monte Carlo sample count
    unsigned long seed = 20240901;
    double tol = 1e-6;
};

/// Weight-function parameters; theta must be a positive rational.
struct Weight {
    int n = 0, m = 0;
    Rat theta = Rat(1);
    Weight(int n_, int m_, Rat th) : n(n_), m(m_), theta(std::move(th)) {
        if (theta <= 0) throw bad_input("weight needs theta > 0");
    }
};

/// Delta_{n,m}(z, w; theta). Equal-radius pair bases (1 - z_j/z_k)(1 - z_k/z_j)
/// are real and nonnegative, so fractional powers are taken branch-free on the
/// real axis; the cross factor is evaluated directly in complex arithmetic.
inline Complex weight_eval(const Weight& wt, const std::vector<Complex>& z,
                           const std::vector<Complex>& w) {
    const double th = rat_to_double(wt.theta);
    double logabs = 0.0;
    for (int j = 0; j < wt.n; ++j)
        for (int k = j + 1; k < wt.n; ++k) {
            double base = std::real((1.0 - z[j] / z[k]) * (1.0 - z[k] / z[j]));
            logabs += th * std::log(std::max(base, 0.0));
        }
    for (int j = 0; j < wt.m; ++j)
        for (int k = j + 1; k < wt.m; ++k) {
            double base = std::real((1.0 - w[j] / w[k]) * (1.0 - w[k] / w[j]));
            logabs += std::log(std::max(base, 0.0)) / th;
        }
    Complex cross(1.0, 0.0);
    for (int j = 0; j < wt.n; ++j)
        for (int k = 0; k < wt.m; ++k) {
            Complex d = (1.0 - z[j] / w[k]) * (1.0 - w[k] / z[j]);
            if (d == Complex(0.0, 0.0)) throw pole_on_diagonal();
            cross *= d;
        }
    return std::exp(logabs) / cross;
}

namespace detail {

/// Monomial-list form of a bisymmetric polynomial with double coefficients.
struct CompiledPoly {
    struct Term {
        std::vector<int> e;
        double c;
    };
    std::vector<Term> terms;
    int max_deg = 0;
};

inline CompiledPoly compile_poly(const BiSymPoly& p, const Rat& theta) {
    CompiledPoly cp;
    for (const auto& [k, c] : p.coeffs) {
        double v = rat_to_double(c.evaluate(theta));
        if (v == 0.0) continue;
        for (const auto& ez : orbit_vectors(k.first, p.n)) {
            for (const auto& ew : orbit_vectors(k.second, p.m)) {
                std::vector<int> e = ez;
                e.insert(e.end(), ew.begin(), ew.end());
                for (int x : e) cp.max_deg = std::max(cp.max_deg, x);
                cp.terms.push_back({std::move(e), v});
            }
        }
    }
    return cp;
}

inline Complex eval_compiled(const CompiledPoly& cp, const std::vector<std::vector<Complex>>& pw) {
    Complex acc(0.0, 0.0);
    for (const auto& t : cp.terms) {
        Complex prod(t.c, 0.0);
        for (std::size_t v = 0; v < t.e.size(); ++v)
            if (t.e[v] != 0) prod *= pw[v][static_cast<std::size_t>(t.e[v])];
        acc += prod;
    }
    return acc;
}

inline int thread_count() {
    if (const char* env = std::getenv("SJACK_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// splitmix64-style counter hash; uniform double in [0,1).
inline double counter_uniform(unsigned long seed, unsigned long counter) {
    std::uint64_t x = (static_cast<std::uint64_t>(seed) * 0x9E3779B97F4A7C15ULL) ^
                      (static_cast<std::uint64_t>(counter) + 0x9E3779B97F4A7C15ULL);
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    x = x ^ (x >> 31);
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

} // namespace detail

/// Gram matrix of the given polynomials under the torus product, tensor
/// trapezoid over the product of tori. The grid is split into fixed chunks
/// combined in index order, so the result is independent of the thread count.
inline std::vector<std::vector<Complex>> gram_quadrature(const std::vector<BiSymPoly>& polys,
                                                         const Weight& wt, const QuadConfig& cfg) {
    if (cfg.xi == cfg.xi_prime) throw radii_equal();
    if (cfg.xi <= 0 || cfg.xi_prime <= 0) throw bad_input("radii must be positive");
    const int n = wt.n, m = wt.m, nv = n + m;
    const long N = cfg.grid;
    const std::size_t B = polys.size();
    std::vector<detail::CompiledPoly> cps;
    int max_deg = 1;
    for (const auto& p : polys) {
        if (p.n != n || p.m != m) throw variable_count_mismatch();
        cps.push_back(detail::compile_poly(p, wt.theta));
        max_deg = std::max(max_deg, cps.back().max_deg);
    }
    // unit-circle angle table plus per-variable radius pairs (base, tilde)
    std::vector<Complex> unit(static_cast<std::size_t>(N));
    for (long t = 0; t < N; ++t) {
        double a = 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(N);
        unit[static_cast<std::size_t>(t)] = Complex(std::cos(a), std::sin(a));
    }
    auto radius = [&](int v) { return v < n ? cfg.xi : cfg.xi_prime; };

    const long chunks = std::min<long>(N, 64);
    std::vector<std::vector<Complex>> partial(static_cast<std::size_t>(chunks),
                                              std::vector<Complex>(B * B, Complex(0, 0)));
    std::atomic<long> next_chunk{0};
    auto worker = [&] {
        std::vector<std::vector<Complex>> pw(static_cast<std::size_t>(nv)),
            pwt(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v) {
            pw[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(max_deg) + 1);
            pwt[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(max_deg) + 1);
        }
        std::vector<Complex> z(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(m));
        std::vector<Complex> vals(B), tvals(B);
        std::vector<long> idx(static_cast<std::size_t>(nv), 0);
        for (;;) {
            long chunk = next_chunk.fetch_add(1);
            if (chunk >= chunks) break;
            auto& acc = partial[static_cast<std::size_t>(chunk)];
            for (long t0 = chunk; t0 < N; t0 += chunks) {
                idx.assign(static_cast<std::size_t>(nv), 0);
                idx[0] = t0;
                // odometer over the remaining angles, lexicographic order
                for (;;) {
                    for (int v = 0; v < nv; ++v) {
                        Complex u = unit[static_cast<std::size_t>(idx[static_cast<std::size_t>(v)])];
                        double r = radius(v);
                        Complex base = r * u, tilde = u / r;
                        auto& a = pw[static_cast<std::size_t>(v)];
                        auto& b = pwt[static_cast<std::size_t>(v)];
                        a[0] = b[0] = Complex(1, 0);
                        for (int d = 1; d <= max_deg; ++d) {
                            a[static_cast<std::size_t>(d)] = a[static_cast<std::size_t>(d - 1)] * base;
                            b[static_cast<std::size_t>(d)] = b[static_cast<std::size_t>(d - 1)] * tilde;
                        }
                        if (v < n) z[static_cast<std::size_t>(v)] = base;
                        else w[static_cast<std::size_t>(v - n)] = base;
                    }
                    Complex wgt = weight_eval(wt, z, w);
                    for (std::size_t i = 0; i < B; ++i) {
                        vals[i] = detail::eval_compiled(cps[i], pw);
                        tvals[i] = std::conj(detail::eval_compiled(cps[i], pwt));
                    }
                    for (std::size_t i = 0; i < B; ++i) {
                        Complex wv = wgt * vals[i];
                        for (std::size_t j = 0; j < B; ++j) acc[i * B + j] += wv * tvals[j];
                    }
                    int v = nv - 1;
                    while (v >= 1) {
                        if (++idx[static_cast<std::size_t>(v)] < N) break;
                        idx[static_cast<std::size_t>(v)] = 0;
                        --v;
                    }
                    if (v == 0) break;
                }
            }
        }
    };
    int nthreads = std::min<long>(detail::thread_count(), chunks);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    double scale = 1.0 / (std::pow(static_cast<double>(N), nv) *
                          rat_to_double(Rat(factorial(n) * factorial(m))));
    std::vector<std::vector<Complex>> out(B, std::vector<Complex>(B, Complex(0, 0)));
    for (long c = 0; c < chunks; ++c)
        for (std::size_t i = 0; i < B; ++i)
            for (std::size_t j = 0; j < B; ++j)
                out[i][j] += partial[static_cast<std::size_t>(c)][i * B + j];
    for (auto& row : out)
        for (auto& x : row) x *= scale;
    return out;
}

/// Single torus inner product <p, q>'_{n,m,theta} by tensor trapezoid.
inline Complex torus_inner_numeric(const BiSymPoly& p, const BiSymPoly& q, const Weight& wt,
                                   const QuadConfig& cfg) {
    return gram_quadrature({p, q}, wt, cfg)[0][1];
}

struct RadiusReport {
    std::vector<std::pair<double, double>> radius_pairs;
    std::vector<Complex> values;
    double max_rel_deviation = 0.0;
};

/// Evaluates the product at several (xi, xi') choices; the exact value is
/// radius independent, so the spread measures quadrature consistency.
inline RadiusReport radius_independence_check(const BiSymPoly& p, const BiSymPoly& q,
                                              const Weight& wt, const QuadConfig& base,
                                              const std::vector<std::pair<double, double>>& pairs) {
    RadiusReport rep;
    rep.radius_pairs = pairs;
    double scale = 0.0;
    for (const auto& [xi, xip] : pairs) {
        QuadConfig cfg = base;
        cfg.xi = xi;
        cfg.xi_prime = xip;
        rep.values.push_back(torus_inner_numeric(p, q, wt, cfg));
        scale = std::max(scale, std::abs(rep.values.back()));
    }
    scale = std::max(scale, 1.0);
    for (std::size_t i = 0; i < rep.values.size(); ++i)
        for (std::size_t j = i + 1; j < rep.values.size(); ++j)
            rep.max_rel_deviation =
                std::max(rep.max_rel_deviation, std::abs(rep.values[i] - rep.values[j]) / scale);
    return rep;
}

struct SymmetryReport {
    Complex lhs, rhs;
    double abs_diff = 0.0;
};

/// |<L^(r) p, q> - <p, L^(r) q>| under the quadrature product.
inline SymmetryReport operator_symmetry_check(const BiSymPoly& p, const BiSymPoly& q, int r,
                                              const Weight& wt, const QuadConfig& cfg) {
    RatFunc th((wt.theta));
    BiSymPoly ps = specialize(p, wt.theta), qs = specialize(q, wt.theta);
    SymmetryReport rep;
    rep.lhs = torus_inner_numeric(apply_L(r, ps, th), qs, wt, cfg);
    rep.rhs = torus_inner_numeric(ps, apply_L(r, qs, th), wt, cfg);
    rep.abs_diff = std::abs(rep.lhs - rep.rhs);
    return rep;
}

struct MonteCarloResult {
    Complex estimate;
    double stderr_est = 0.0;
};

/// Monte Carlo estimator of the torus product with a counter-based generator
/// keyed by (seed, point index); schedule independent by construction.
inline MonteCarloResult monte_carlo_inner(const BiSymPoly& p, const BiSymPoly& q, const Weight& wt,
                                          const QuadConfig& cfg) {
    if (cfg.xi == cfg.xi_prime) throw radii_equal();
    const int n = wt.n, m = wt.m, nv = n + m;
    detail::CompiledPoly cp = detail::compile_poly(p, wt.theta);
    detail::CompiledPoly cq = detail::compile_poly(q, wt.theta);
    int max_deg = std::max({1, cp.max_deg, cq.max_deg});
    std::vector<std::vector<Complex>> pw(static_cast<std::size_t>(nv)),
        pwt(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        pw[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(max_deg) + 1);
        pwt[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(max_deg) + 1);
    }
    std::vector<Complex> z(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(m));
    Complex sum(0, 0);
    double sumsq = 0.0;
    const long S = cfg.mc_samples;
    std::vector<Complex> samples(static_cast<std::size_t>(S));
    for (long i = 0; i < S; ++i) {
        for (int v = 0; v < nv; ++v) {
            double a = 2.0 * M_PI *
                       detail::counter_uniform(cfg.seed, static_cast<unsigned long>(i) *
                                                             static_cast<unsigned long>(nv) +
                                                             static_cast<unsigned long>(v));
            Complex u(std::cos(a), std::sin(a));
            double r = v < n ? cfg.xi : cfg.xi_prime;
            Complex base = r * u, tilde = u / r;
            auto& aa = pw[static_cast<std::size_t>(v)];
            auto& bb = pwt[static_cast<std::size_t>(v)];
            aa[0] = bb[0] = Complex(1, 0);
            for (int d = 1; d <= max_deg; ++d) {
                aa[static_cast<std::size_t>(d)] = aa[static_cast<std::size_t>(d - 1)] * base;
                bb[static_cast<std::size_t>(d)] = bb[static_cast<std::size_t>(d - 1)] * tilde;
            }
            if (v < n) z[static_cast<std::size_t>(v)] = base;
            else w[static_cast<std::size_t>(v - n)] = base;
        }
        Complex f = weight_eval(wt, z, w) * detail::eval_compiled(cp, pw) *
                    std::conj(detail::eval_compiled(cq, pwt));
        samples[static_cast<std::size_t>(i)] = f;
        sum += f;
    }
    Complex mean = sum / static_cast<double>(S);
    for (long i = 0; i < S; ++i) {
        double d = std::abs(samples[static_cast<std::size_t>(i)] - mean);
        sumsq += d * d;
    }
    double norm = 1.0 / rat_to_double(Rat(factorial(n) * factorial(m)));
    MonteCarloResult res;
    res.estimate = mean * norm;
    res.stderr_est = S > 1 ? std::sqrt(sumsq / (static_cast<double>(S) * (static_cast<double>(S) - 1))) * norm : 0.0;
    return res;
}

/// Gram report via trapezoid quadrature (or Monte Carlo on request).
inline GramReport gram_numeric(const FatHookParams& hp, int d, const Rat& theta,
                               const QuadConfig& cfg, bool monte_carlo = false,
                               bool cumulative = false) {
    GramReport rep;
    rep.method = monte_carlo ? "monte-carlo" : "quadrature";
    rep.n = hp.n;
    rep.m = hp.m;
    rep.degree = d;
    rep.cumulative = cumulative;
    rep.theta = theta.get_str();
    rep.xi = cfg.xi;
    rep.xi_prime = cfg.xi_prime;
    rep.grid = cfg.grid;
    rep.mc_samples = monte_carlo ? cfg.mc_samples : 0;
    rep.seed = monte_carlo ? cfg.seed : 0;
    rep.index = cumulative ? enumerate_fat_hook(hp, d) : fat_hook_of_weight(hp, d);
    const std::size_t sz = rep.index.size();
    Weight wt(hp.n, hp.m, theta);
    std::vector<double> formula(sz);
    for (std::size_t i = 0; i < sz; ++i)
        formula[i] = norm_super_numeric(rep.index[i], hp.n, hp.m, theta);
    rep.numeric_values.assign(sz, std::vector<double>(sz, 0.0));
    if (monte_carlo) {
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = i; j < sz; ++j) {
                Complex v = monte_carlo_inner(super_jack(rep.index[i], hp.n, hp.m),
                                              super_jack(rep.index[j], hp.n, hp.m), wt, cfg)
                                .estimate;
                rep.numeric_values[i][j] = v.real();
                rep.numeric_values[j][i] = v.real();
            }
    } else {
        std::vector<BiSymPoly> polys;
        for (const auto& lam : rep.index) polys.push_back(super_jack(lam, hp.n, hp.m));
        auto g = gram_quadrature(polys, wt, cfg);
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j) rep.numeric_values[i][j] = g[i][j].real();
    }
    rep.finalize_errors(formula);
    return rep;
}

} // namespace sjack
