#include <catch2/catch_amalgamated.hpp>

#include "sjack/quadrature.hpp"

using namespace sjack;

namespace {
QuadConfig grid_config(long grid) {
    QuadConfig cfg;
    cfg.grid = grid;
    return cfg;
}
} // namespace

TEST_CASE("weight evaluation") {
    REQUIRE(weight_eval(Weight(1, 0, Rat(3, 2)), {Complex(0.3, 0.4)}, {}) == Complex(1.0, 0.0));
    REQUIRE(weight_eval(Weight(0, 0, Rat(1)), {}, {}) == Complex(1.0, 0.0));
    // direct substitution at n = m = 1, theta = 1, z = 1, w = 2i
    Complex v = weight_eval(Weight(1, 1, Rat(1)), {Complex(1, 0)}, {Complex(0, 2)});
    Complex expect = 1.0 / ((1.0 - Complex(1, 0) / Complex(0, 2)) * (1.0 - Complex(0, 2)));
    REQUIRE(std::abs(v - expect) < 1e-15);
    REQUIRE_THROWS_AS(weight_eval(Weight(1, 1, Rat(1)), {Complex(1, 0)}, {Complex(1, 0)}),
                      pole_on_diagonal);
    REQUIRE_THROWS_AS(Weight(1, 1, Rat(-1)), bad_input);
}

TEST_CASE("trapezoid inner product") {
    QuadConfig cfg = grid_config(256);
    BiSymPoly unit = BiSymPoly::constant(1, 1, RatFunc(1));
    const BiSymPoly& sp1 = super_jack(Partition{1}, 1, 1);

    REQUIRE(std::abs(torus_inner_numeric(unit, unit, Weight(1, 1, Rat(1)), cfg)) < 1e-12);
    REQUIRE(std::abs(torus_inner_numeric(sp1, sp1, Weight(1, 1, Rat(1)), cfg) - 1.0) < 1e-12);
    REQUIRE(std::abs(torus_inner_numeric(sp1, sp1, Weight(1, 1, Rat(2)), cfg) - 0.5) < 1e-12);
    REQUIRE_THROWS_AS(torus_inner_numeric(sp1, sp1, Weight(1, 1, Rat(1)),
                                          [] { QuadConfig c; c.xi_prime = c.xi; return c; }()),
                      radii_equal);

    SECTION("agrees with the exact product at theta = 1") {
        QuadConfig small = grid_config(64);
        for (auto [n, m] : {std::pair{1, 1}, {2, 1}}) {
            Weight wt(n, m, Rat(1));
            for (const auto& lam : enumerate_fat_hook(FatHookParams(n, m), 4)) {
                const BiSymPoly& sp = super_jack(lam, n, m);
                double exact = rat_to_double(super_inner_exact(sp, sp, n, m));
                Complex num = torus_inner_numeric(sp, sp, wt, n + m > 2 ? small : cfg);
                REQUIRE(std::abs(num.real() - exact) < 1e-9);
                REQUIRE(std::abs(num.imag()) < 1e-12);
            }
        }
    }

    SECTION("kernel entries vanish numerically") {
        for (const Rat& th : {Rat(1, 2), Rat(2)})
            REQUIRE(std::abs(torus_inner_numeric(unit, unit, Weight(1, 1, th), cfg)) < 1e-8);
    }
}

TEST_CASE("grid refinement converges") {
    // theta = 1/2 on (2,1): the weight is C^0 at angle coincidences, so the
    // error decays algebraically; increments must shrink along 32 -> 64 -> 128
    Weight wt(2, 1, Rat(1, 2));
    const BiSymPoly& sp = super_jack(Partition{2, 1}, 2, 1);
    double v32 = torus_inner_numeric(sp, sp, wt, grid_config(32)).real();
    double v64 = torus_inner_numeric(sp, sp, wt, grid_config(64)).real();
    double v128 = torus_inner_numeric(sp, sp, wt, grid_config(128)).real();
    REQUIRE(std::abs(v64 - v32) > std::abs(v128 - v64));
    double formula = norm_super_numeric(Partition{2, 1}, 2, 1, Rat(1, 2));
    REQUIRE(std::abs(v128 - formula) < 4 * std::abs(v64 - formula));
}

TEST_CASE("radius independence") {
    QuadConfig cfg = grid_config(256);
    const BiSymPoly& sp1 = super_jack(Partition{1}, 1, 1);
    auto rep = radius_independence_check(sp1, sp1, Weight(1, 1, Rat(3, 2)), cfg,
                                         {{1, 2}, {0.7, 1.3}, {2, 1}});
    REQUIRE(rep.max_rel_deviation <= 1e-8);

    BiSymPoly unit = BiSymPoly::constant(1, 1, RatFunc(1));
    auto repu = radius_independence_check(unit, unit, Weight(1, 1, Rat(3, 2)), cfg,
                                          {{1, 2}, {0.7, 1.3}});
    REQUIRE(repu.max_rel_deviation <= 1e-13);

    SECTION("scale invariance at m = 0 is exact up to rounding") {
        BiSymPoly p(2, 0);
        p.add_term(Partition{2, 1}, Partition(), RatFunc(1));
        auto repm0 = radius_independence_check(p, p, Weight(2, 0, Rat(3, 2)), grid_config(64),
                                               {{0.5, 1}, {1.0, 2}, {2.0, 4}});
        REQUIRE(repm0.max_rel_deviation <= 1e-12);
    }
}

TEST_CASE("Hermitian symmetry of the quadrature product") {
    QuadConfig cfg = grid_config(128);
    Weight wt(1, 1, Rat(3, 2));
    auto basis = enumerate_fat_hook(FatHookParams(1, 1), 3);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            Complex a = torus_inner_numeric(super_jack(basis[i], 1, 1),
                                            super_jack(basis[j], 1, 1), wt, cfg);
            Complex b = torus_inner_numeric(super_jack(basis[j], 1, 1),
                                            super_jack(basis[i], 1, 1), wt, cfg);
            REQUIRE(std::abs(a - std::conj(b)) < 1e-10);
            if (i == j) REQUIRE(std::abs(a.imag()) < 1e-12);
        }
    }
}

TEST_CASE("operator symmetry under the product") {
    QuadConfig cfg = grid_config(256);
    Weight wt(1, 1, Rat(3, 2));
    const BiSymPoly& sp1 = super_jack(Partition{1}, 1, 1);
    const BiSymPoly& sp2 = super_jack(Partition{2}, 1, 1);
    auto r1 = operator_symmetry_check(sp1, sp1, 1, wt, cfg);
    REQUIRE(r1.abs_diff < 1e-12);  // Euler: both sides d <p,p>
    auto r2 = operator_symmetry_check(sp2, sp2, 2, wt, cfg);
    REQUIRE(r2.abs_diff < 1e-9);
    auto r3 = operator_symmetry_check(sp2, super_jack(Partition{1, 1}, 1, 1), 2,
                                      Weight(1, 1, Rat(2)), cfg);
    REQUIRE(std::abs(r3.lhs) < 1e-9);  // orthogonality kills both sides
    REQUIRE(std::abs(r3.rhs) < 1e-9);
}

TEST_CASE("Monte Carlo integrator") {
    QuadConfig cfg;
    cfg.mc_samples = 8192;
    // constant on the classical side integrates to 1 with zero variance
    BiSymPoly unit0 = BiSymPoly::constant(1, 0, RatFunc(1));
    auto flat = monte_carlo_inner(unit0, unit0, Weight(1, 0, Rat(2)), cfg);
    REQUIRE(flat.estimate.real() == Catch::Approx(1.0));
    REQUIRE(flat.stderr_est < 1e-14);

    // at theta = 1 the diagonal integrand is constant, so this is exact
    const BiSymPoly& sp1 = super_jack(Partition{1}, 1, 1);
    auto mc = monte_carlo_inner(sp1, sp1, Weight(1, 1, Rat(1)), cfg);
    REQUIRE(std::abs(mc.estimate.real() - 1.0) <= 3 * mc.stderr_est + 1e-14);

    // a genuinely stochastic case: norm 1/2 at theta = 2
    auto mc_half = monte_carlo_inner(sp1, sp1, Weight(1, 1, Rat(2)), cfg);
    REQUIRE(mc_half.stderr_est > 0.0);
    REQUIRE(std::abs(mc_half.estimate.real() - 0.5) <= 3 * mc_half.stderr_est);

    // reproducibility: same seed, same estimate
    auto mc2 = monte_carlo_inner(sp1, sp1, Weight(1, 1, Rat(1)), cfg);
    REQUIRE(mc.estimate == mc2.estimate);

    SECTION("four-torus example against the norm formula") {
        QuadConfig big;
        big.mc_samples = 32768;
        const BiSymPoly& sp22 = super_jack(Partition{2, 2}, 2, 2);
        auto res = monte_carlo_inner(sp22, sp22, Weight(2, 2, Rat(1)), big);
        double expect = norm_super_numeric(Partition{2, 2}, 2, 2, Rat(1));
        REQUIRE(std::abs(res.estimate.real() - expect) <= 3 * res.stderr_est);
    }
}

TEST_CASE("numeric Gram report") {
    QuadConfig cfg = grid_config(128);
    auto rep = gram_numeric(FatHookParams(1, 1), 2, Rat(2), cfg, false, true);
    REQUIRE(rep.method == "quadrature");
    REQUIRE(rep.grid == 128);
    REQUIRE(rep.index.size() == 4);
    for (std::size_t i = 0; i < rep.index.size(); ++i) {
        double expect = norm_super_numeric(rep.index[i], 1, 1, Rat(2));
        REQUIRE(std::abs(rep.numeric_values[i][i] - expect) < 1e-8);
    }
    REQUIRE(rep.max_offdiag_abs < 1e-8);
}
