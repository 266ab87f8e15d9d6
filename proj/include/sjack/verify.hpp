#pragma once

#include <chrono>
#include <functional>
#include <sstream>

#include "sjack/quadrature.hpp"

namespace sjack {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
    double seconds = 0.0;

    void fail(const std::string& msg) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

namespace detail {

inline const std::vector<std::pair<int, int>>& standard_hooks() {
    static const std::vector<std::pair<int, int>> hooks{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    return hooks;
}

template <class F>
CheckResult timed_check(const std::string& name, F&& body, double limit_seconds = 0.0) {
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0.0 && r.seconds > limit_seconds)
        r.fail("runtime " + std::to_string(r.seconds) + "s exceeded the " +
               std::to_string(limit_seconds) + "s target");
    return r;
}

} // namespace detail

/// Jack orthogonality under the exact constant-term product:
/// n = 2, theta in {1,2,3}, all |lambda|, |mu| <= 5.
inline CheckResult verify_jack_orthogonality() {
    return detail::timed_check("jack-orthogonality", [](CheckResult& r) {
        std::vector<Partition> idx;
        for (int d = 0; d <= 5; ++d)
            for (const auto& lam : partitions_of(d, 2)) idx.push_back(lam);
        long checked = 0;
        for (long th : {1L, 2L, 3L}) {
            for (std::size_t i = 0; i < idx.size(); ++i) {
                SymPoly pi = jack(idx[i], 2);
                for (std::size_t j = i; j < idx.size(); ++j) {
                    Rat v = macdonald_inner_exact(pi, jack(idx[j], 2), th);
                    Rat expect = (i == j) ? norm_jack_exact_int(idx[i], 2, th) : Rat(0);
                    ++checked;
                    if (v != expect) {
                        r.fail("mismatch at lambda=" + idx[i].to_string() + " mu=" +
                               idx[j].to_string() + " theta=" + std::to_string(th) + ": got " +
                               v.get_str() + " want " + expect.get_str());
                        return;
                    }
                }
            }
        }
        r.detail = std::to_string(checked) + " exact pairings over theta in {1,2,3}";
    }, /*limit_seconds=*/120.0);
}

/// Super orthogonality at theta = 1: cumulative exact Gram matrices are
/// diagonal with diagonal equal to the closed-form norms.
inline CheckResult verify_orthogonality_exact() {
    return detail::timed_check("orthogonality-exact", [](CheckResult& r) {
        struct Case { int n, m, dmax; };
        long entries = 0;
        for (Case c : {Case{1, 1, 5}, Case{2, 1, 5}, Case{1, 2, 5}, Case{2, 2, 4}}) {
            FatHookParams hp(c.n, c.m);
            auto rep = gram_exact(hp, c.dmax, ThetaValue::parse("1"), /*cumulative=*/true);
            for (std::size_t i = 0; i < rep.index.size(); ++i) {
                for (std::size_t j = 0; j < rep.index.size(); ++j) {
                    ++entries;
                    const Rat& v = rep.exact_values[i][j];
                    if (i != j && v != 0) {
                        r.fail("nonzero off-diagonal <" + rep.index[i].to_string() + "," +
                               rep.index[j].to_string() + "> = " + v.get_str() + " at (n,m)=(" +
                               std::to_string(c.n) + "," + std::to_string(c.m) + ")");
                        return;
                    }
                    if (i == j && v != norm_super_exact_theta1(rep.index[i], c.n, c.m)) {
                        r.fail("diagonal mismatch at " + rep.index[i].to_string());
                        return;
                    }
                }
            }
        }
        // the two pinned spot values
        BiSymPoly one = BiSymPoly::constant(1, 1, RatFunc(1));
        if (super_inner_exact(super_jack(Partition{1}, 1, 1), super_jack(Partition{1}, 1, 1), 1, 1) != Rat(1))
            r.fail("<SP_(1),SP_(1)>'_{1,1,1} != 1");
        if (super_inner_exact(one, one, 1, 1) != Rat(0)) r.fail("<1,1>'_{1,1,1} != 0");
        std::ostringstream os;
        os << entries << " exact Gram entries over (1,1),(2,1),(1,2) d<=5 and (2,2) d<=4";
        r.detail = os.str();
    }, /*limit_seconds=*/600.0);
}

/// Kernel: rectangle-free partitions have exact norm zero at theta = 1 and
/// numerically vanishing norm at theta in {1/2, 2} (n = m = 1, grid 256).
inline CheckResult verify_kernel() {
    return detail::timed_check("kernel", [](CheckResult& r) {
        long exact_checked = 0;
        for (auto [n, m] : detail::standard_hooks()) {
            FatHookParams hp(n, m);
            for (const auto& lam : kernel_basis(hp, 5)) {
                if (static_cast<int>(lam.weight()) > 5) continue;
                const BiSymPoly& sp = super_jack(lam, n, m);
                if (super_inner_exact(sp, sp, n, m) != 0) {
                    r.fail("nonzero exact norm for kernel partition " + lam.to_string());
                    return;
                }
                ++exact_checked;
            }
        }
        QuadConfig cfg;
        cfg.grid = 256;
        double worst = 0.0;
        long numeric_checked = 0;
        for (const Rat& th : {Rat(1, 2), Rat(2)}) {
            Weight wt(1, 1, th);
            for (const auto& lam : kernel_basis(FatHookParams(1, 1), 5)) {
                const BiSymPoly& sp = super_jack(lam, 1, 1);
                double v = std::abs(torus_inner_numeric(sp, sp, wt, cfg));
                worst = std::max(worst, v);
                ++numeric_checked;
                if (v > 1e-6)
                    r.fail("kernel norm " + std::to_string(v) + " above 1e-6 for " +
                           lam.to_string() + " theta=" + th.get_str());
            }
        }
        std::ostringstream os;
        os << exact_checked << " exact zeros, " << numeric_checked
           << " quadrature norms (max " << worst << ")";
        r.detail = os.str();
    });
}

/// Trapezoid Gram blocks against the closed-form norms, plus radius
/// independence: (n,m) in {(1,1),(2,1)}, theta in {1/2, 3/2, 2}, degree-graded
/// blocks up to |lambda| = 4. Radius agreement is checked on the norms
/// (diagonal entries) across all three pairs; the full block matrices must
/// agree across the pairs lying in a common radius regime, and regime-crossing
/// pairs must match after the Hermitian transpose, which is the discrete form
/// of the inversion symmetry behind radius freedom.
inline CheckResult verify_numeric_norms() {
    return detail::timed_check("numeric-norms", [](CheckResult& r) {
        const std::vector<std::pair<double, double>> radius_pairs{{1, 2}, {0.7, 1.3}, {2, 1}};
        std::ostringstream os;
        for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
            FatHookParams hp(n, m);
            for (const Rat& th : {Rat(1, 2), Rat(3, 2), Rat(2)}) {
                const double tol = th < 1 ? 1e-4 : 1e-6;
                Weight wt(n, m, th);
                double worst_diag = 0.0, worst_off = 0.0, worst_dev = 0.0, worst_herm = 0.0;
                for (int d = 0; d <= 4; ++d) {
                    auto index = fat_hook_of_weight(hp, d);
                    std::vector<BiSymPoly> polys;
                    std::vector<double> formula;
                    for (const auto& lam : index) {
                        polys.push_back(super_jack(lam, n, m));
                        formula.push_back(norm_super_numeric(lam, n, m, th));
                    }
                    // accuracy against the norm formula at the base radii
                    QuadConfig cfg;
                    cfg.grid = (n + m == 2) ? 256 : (th < 1 ? 512 : 128);
                    auto g = gram_quadrature(polys, wt, cfg);
                    for (std::size_t i = 0; i < index.size(); ++i) {
                        double ref = formula[i];
                        double err = std::abs(g[i][i].real() - ref) / (ref != 0.0 ? ref : 1.0);
                        worst_diag = std::max(worst_diag, err);
                        if (err > tol)
                            r.fail("diagonal " + index[i].to_string() + " theta=" + th.get_str() +
                                   " rel err " + std::to_string(err));
                        for (std::size_t j = 0; j < index.size(); ++j) {
                            if (i == j) continue;
                            double scale =
                                std::max(1.0, std::sqrt(std::abs(formula[i] * formula[j])));
                            double off = std::abs(g[i][j]) / scale;
                            worst_off = std::max(worst_off, off);
                            if (off > tol)
                                r.fail("off-diagonal <" + index[i].to_string() + "," +
                                       index[j].to_string() + "> theta=" + th.get_str() + " " +
                                       std::to_string(off));
                        }
                    }
                    // radius independence at a fixed grid shared by the three pairs
                    QuadConfig rcfg;
                    rcfg.grid = (n + m == 2) ? 256 : 128;
                    std::vector<std::vector<std::vector<Complex>>> grams;
                    for (const auto& [xi, xip] : radius_pairs) {
                        QuadConfig c = rcfg;
                        c.xi = xi;
                        c.xi_prime = xip;
                        grams.push_back(gram_quadrature(polys, wt, c));
                    }
                    for (std::size_t i = 0; i < index.size(); ++i) {
                        double scale = 1.0;
                        for (const auto& gm : grams) scale = std::max(scale, std::abs(gm[i][i]));
                        for (std::size_t a = 0; a < grams.size(); ++a)
                            for (std::size_t b = a + 1; b < grams.size(); ++b)
                                worst_dev = std::max(
                                    worst_dev, std::abs(grams[a][i][i] - grams[b][i][i]) / scale);
                        for (std::size_t j = 0; j < index.size(); ++j) {
                            double s2 = std::max(
                                {1.0, std::abs(grams[0][i][j]), std::abs(grams[1][i][j])});
                            worst_dev = std::max(
                                worst_dev, std::abs(grams[0][i][j] - grams[1][i][j]) / s2);
                            // (2,1) = 1/(1,2) up to common scale: adjoint relation
                            worst_herm = std::max(worst_herm,
                                                  std::abs(grams[2][i][j] -
                                                           std::conj(grams[0][j][i])));
                        }
                    }
                }
                if (worst_dev > 1e-8)
                    r.fail("radius deviation " + std::to_string(worst_dev) + " at (n,m)=(" +
                           std::to_string(n) + "," + std::to_string(m) + ") theta=" + th.get_str());
                if (worst_herm > 1e-10)
                    r.fail("inversion/adjoint defect " + std::to_string(worst_herm) +
                           " at theta=" + th.get_str());
                os << "(" << n << "," << m << ") th=" << th.get_str() << ": diag " << worst_diag
                   << ", off " << worst_off << ", radius " << worst_dev << "; ";
                if (!r.pass) return;
            }
        }
        r.detail = os.str();
    });
}

/// Route equivalence of the homomorphism and skew-expansion constructions,
/// symbolic theta, |lambda| <= 6.
inline CheckResult verify_route_equivalence() {
    return detail::timed_check("route-equivalence", [](CheckResult& r) {
        long checked = 0;
        for (auto [n, m] : detail::standard_hooks()) {
            FatHookParams hp(n, m);
            for (const auto& lam : enumerate_fat_hook(hp, 6)) {
                if (!(super_jack(lam, n, m) == super_jack_skew_route(lam, n, m))) {
                    r.fail("routes differ for " + lam.to_string() + " at (n,m)=(" +
                           std::to_string(n) + "," + std::to_string(m) + ")");
                    return;
                }
                ++checked;
            }
        }
        r.detail = std::to_string(checked) + " partitions, symbolic theta";
    });
}

/// Quasi-invariance of all SP_lambda, lambda in H_{2,2}, |lambda| <= 5,
/// theta in {3/2, 5/7, 2}.
inline CheckResult verify_quasi_invariance() {
    return detail::timed_check("quasi-invariance", [](CheckResult& r) {
        long checked = 0;
        for (const Rat& th : {Rat(3, 2), Rat(5, 7), Rat(2)}) {
            for (const auto& lam : enumerate_fat_hook(FatHookParams(2, 2), 5)) {
                if (!quasi_invariance_check(super_jack(lam, 2, 2), th)) {
                    r.fail("quasi-invariance fails for " + lam.to_string() + " at theta=" +
                           th.get_str());
                    return;
                }
                ++checked;
            }
        }
        r.detail = std::to_string(checked) + " polynomial/theta combinations";
    });
}

/// Eigen-structure: exact proportionality for r <= 3 on H_{2,2} up to degree 5
/// at theta = 5/7, Euler eigenvalue |lambda|, joint-spectrum separation, and
/// numeric operator symmetry for r = 2 on (1,1) at theta = 3/2.
inline CheckResult verify_eigen() {
    return detail::timed_check("eigen", [](CheckResult& r) {
        const RatFunc th(Rat(5, 7));
        std::vector<std::vector<Rat>> tuples;
        std::vector<Partition> idx;
        for (const auto& lam : enumerate_fat_hook(FatHookParams(2, 2), 5)) {
            std::vector<Rat> tup;
            for (int order = 1; order <= 3; ++order) {
                RatFunc ev = eigenvalue_of(lam, order, 2, 2, th);  // throws if not proportional
                if (order == 1 && ev != RatFunc(Rat(lam.weight()))) {
                    r.fail("Euler eigenvalue != |lambda| for " + lam.to_string());
                    return;
                }
                tup.push_back(ev.constant_value());
            }
            tuples.push_back(std::move(tup));
            idx.push_back(lam);
        }
        for (std::size_t i = 0; i < tuples.size(); ++i)
            for (std::size_t j = i + 1; j < tuples.size(); ++j)
                if (tuples[i] == tuples[j]) {
                    r.fail("eigenvalue tuples collide: " + idx[i].to_string() + " vs " +
                           idx[j].to_string());
                    return;
                }
        // operator symmetry under the quadrature product
        Weight wt(1, 1, Rat(3, 2));
        QuadConfig cfg;
        cfg.grid = 256;
        double worst = 0.0;
        auto basis = enumerate_fat_hook(FatHookParams(1, 1), 3);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i; j < basis.size(); ++j) {
                auto rep = operator_symmetry_check(super_jack(basis[i], 1, 1),
                                                   super_jack(basis[j], 1, 1), 2, wt, cfg);
                worst = std::max(worst, rep.abs_diff);
                if (rep.abs_diff > 1e-6)
                    r.fail("symmetry defect " + std::to_string(rep.abs_diff) + " for <" +
                           basis[i].to_string() + "," + basis[j].to_string() + ">");
            }
        }
        std::ostringstream os;
        os << tuples.size() << " spectra (r<=3) separated at theta=5/7; max symmetry defect "
           << worst;
        r.detail = os.str();
    });
}

/// Exact symbolic dualities up to weight 6: b-coefficient inversion, the
/// omega/P-Q relation, the super-polynomial duality, and norm duality.
inline CheckResult verify_dualities() {
    return detail::timed_check("dualities", [](CheckResult& r) {
        for (int d = 0; d <= 6; ++d) {
            for (const auto& lam : partitions_of(d)) {
                if (b_coeff(lam.conjugate()).substitute_inverse() * b_coeff(lam) != RatFunc(1)) {
                    r.fail("b-duality fails for " + lam.to_string());
                    return;
                }
                PowerSumExpr lhs = omega_auto(jack_power_sums(lam), RatFunc::theta_inverse());
                PowerSumExpr rhs;
                RatFunc b = b_coeff(lam.conjugate());
                for (const auto& [k, c] : jack_power_sums(lam.conjugate()).coeffs)
                    rhs.add_term(k, (c * b).substitute_inverse());
                if (!(lhs == rhs)) {
                    r.fail("omega duality fails for " + lam.to_string());
                    return;
                }
            }
        }
        long dual_checked = 0, norm_checked = 0;
        for (auto [n, m] : detail::standard_hooks()) {
            FatHookParams hp(n, m);
            for (const auto& lam : enumerate_fat_hook(hp, 6)) {
                if (!super_jack_dual_check(lam, n, m)) {
                    r.fail("SP duality fails for " + lam.to_string());
                    return;
                }
                ++dual_checked;
                if (!norm_duality_check(lam, n, m)) {
                    r.fail("norm duality fails for " + lam.to_string());
                    return;
                }
                ++norm_checked;
            }
        }
        std::ostringstream os;
        os << "b/omega dualities to weight 6; " << dual_checked << " SP and " << norm_checked
           << " norm duality identities";
        r.detail = os.str();
    });
}

/// Positivity of the norms on rectangle-containing partitions and the product
/// expansion coefficient properties.
inline CheckResult verify_positivity_fprops() {
    return detail::timed_check("positivity", [](CheckResult& r) {
        long positives = 0;
        for (auto [n, m] : detail::standard_hooks()) {
            FatHookParams hp(n, m);
            for (const auto& lam : enumerate_fat_hook(hp, 6)) {
                if (!contains_rectangle(lam, hp)) continue;
                for (const Rat& th : {Rat(1, 3), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(3)}) {
                    double v = norm_super_numeric(lam, n, m, th);
                    ++positives;
                    if (!(v > 0)) {
                        r.fail("norm not positive for " + lam.to_string() + " theta=" +
                               th.get_str());
                        return;
                    }
                }
            }
        }
        // f-coefficient properties
        auto check_f = [&](const Partition& mu, const Partition& nu, bool symbolic,
                           const std::vector<Rat>& thetas) -> bool {
            const auto& f = f_expansion(mu, nu);
            // (1) unit leading coefficient at mu + nu
            if (f_coeff(sum_parts(mu, nu), mu, nu) != RatFunc(1)) {
                r.fail("f^{mu+nu} != 1 for " + mu.to_string() + " " + nu.to_string());
                return false;
            }
            Partition muc = mu.conjugate(), nuc = nu.conjugate();
            for (const auto& [lam, c] : f) {
                if (c.is_zero()) continue;
                // (3) support constraints
                if (!(contains(mu, lam) && contains(nu, lam) &&
                      dominance_leq(union_parts(mu, nu), lam) &&
                      dominance_leq(lam, sum_parts(mu, nu)))) {
                    r.fail("f-support violated at " + lam.to_string());
                    return false;
                }
                // (2) conjugation duality
                RatFunc dual = f_coeff(lam.conjugate(), muc, nuc);
                RatFunc ratio = b_coeff(lam) / (b_coeff(mu) * b_coeff(nu));
                if (symbolic) {
                    if (c != dual.substitute_inverse() * ratio) {
                        r.fail("f-duality fails symbolically at " + lam.to_string());
                        return false;
                    }
                } else {
                    for (const Rat& th : thetas) {
                        if (c.evaluate(th) != dual.evaluate(Rat(1) / th) * ratio.evaluate(th)) {
                            r.fail("f-duality fails at theta=" + th.get_str());
                            return false;
                        }
                    }
                }
            }
            return true;
        };
        const std::vector<Rat> thetas{Rat(1), Rat(5, 7), Rat(2)};
        long fpairs = 0;
        for (int total = 0; total <= 6; ++total) {
            for (int a = 0; a <= total; ++a) {
                for (const auto& mu : partitions_of(a)) {
                    for (const auto& nu : partitions_of(total - a)) {
                        if (nu < mu) continue;  // unordered pairs
                        bool symbolic = total <= 4;
                        if (!check_f(mu, nu, symbolic, thetas)) return;
                        ++fpairs;
                    }
                }
            }
        }
        std::ostringstream os;
        os << positives << " positive norms; " << fpairs
           << " f-coefficient pairs (symbolic to weight 4, rational theta to weight 6)";
        r.detail = os.str();
    });
}

inline std::vector<std::pair<std::string, std::function<CheckResult()>>> verification_suites() {
    return {
        {"jack-orthogonality", verify_jack_orthogonality},
        {"orthogonality-exact", verify_orthogonality_exact},
        {"kernel", verify_kernel},
        {"numeric-norms", verify_numeric_norms},
        {"route-equivalence", verify_route_equivalence},
        {"quasi-invariance", verify_quasi_invariance},
        {"eigen", verify_eigen},
        {"dualities", verify_dualities},
        {"positivity", verify_positivity_fprops},
    };
}

} // namespace sjack
