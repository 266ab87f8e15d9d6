#include <catch2/catch_amalgamated.hpp>

#include "sjack/products.hpp"

using namespace sjack;

namespace {
const RatFunc t = RatFunc::theta();
const RatFunc one(1);
} // namespace

TEST_CASE("star conjugation") {
    BiSymPoly p(1, 1);  // z - w/theta
    p.add_term(Partition{1}, Partition(), one);
    p.add_term(Partition(), Partition{1}, -t.inverse());
    Laurent st = conjugate_star(p, ThetaValue::parse("2"));
    REQUIRE(st.terms.at({-1, 0}) == Rat(1));
    REQUIRE(st.terms.at({0, -1}) == Rat(-1, 2));
    REQUIRE(st.terms.size() == 2);

    Laurent c = conjugate_star(BiSymPoly::constant(1, 1, RatFunc(Rat(7, 3))),
                               ThetaValue::parse("1"));
    REQUIRE(c.terms.at({0, 0}) == Rat(7, 3));
    REQUIRE_THROWS_AS(conjugate_star(p, ThetaValue::symbolic()), symbolic_theta_not_allowed);
}

TEST_CASE("exact torus product at theta = 1") {
    BiSymPoly unit = BiSymPoly::constant(1, 1, one);
    REQUIRE(super_inner_exact(unit, unit, 1, 1) == Rat(0));
    const BiSymPoly& sp1 = super_jack(Partition{1}, 1, 1);
    REQUIRE(super_inner_exact(sp1, sp1, 1, 1) == Rat(1));
    REQUIRE(super_inner_exact(super_jack(Partition{2}, 1, 1), super_jack(Partition{1, 1}, 1, 1),
                              1, 1) == Rat(0));

    SECTION("different degrees are orthogonal") {
        for (const auto& a : enumerate_fat_hook(FatHookParams(1, 1), 4)) {
            for (const auto& b : enumerate_fat_hook(FatHookParams(1, 1), 4)) {
                if (a.weight() == b.weight()) continue;
                REQUIRE(super_inner_exact(super_jack(a, 1, 1), super_jack(b, 1, 1), 1, 1) ==
                        Rat(0));
            }
        }
    }

    SECTION("reduces to the constant-term Macdonald product at m = 0") {
        for (const auto& lam : partitions_of(3, 2)) {
            const BiSymPoly& sp = super_jack(lam, 2, 0);
            REQUIRE(super_inner_exact(sp, sp, 2, 0) ==
                    macdonald_inner_exact(jack(lam, 2), jack(lam, 2), 1));
        }
    }

    SECTION("n = 0 diagonal matches the dual-side norm") {
        for (int d = 0; d <= 4; ++d) {
            for (const auto& lam : partitions_of(d)) {
                if (lam.part(1) > 2) continue;  // outside H_{0,2}
                const BiSymPoly& sp = super_jack(lam, 0, 2);
                REQUIRE(super_inner_exact(sp, sp, 0, 2) ==
                        norm_super_exact_theta1(lam, 0, 2));
            }
        }
    }
}

TEST_CASE("norm formula") {
    REQUIRE(norm_super_ratio(Partition{1}, 1, 1) == t.inverse());
    // east (1), south empty: ratio 2/(1+theta); the defining integral confirms
    // this against trapezoid quadrature at theta in {1/2, 2, 3}
    REQUIRE(norm_super_ratio(Partition{2}, 1, 1) == RatFunc(2) / (one + t));
    REQUIRE(norm_super_ratio(Partition{1}, 1, 2) == RatFunc(0));  // rectangle missing
    REQUIRE_THROWS_AS(norm_super_ratio(Partition{2, 2}, 1, 1), not_in_fat_hook);

    REQUIRE(norm_super_exact_theta1(Partition{1}, 1, 1) == Rat(1));
    REQUIRE(norm_super_exact_theta1(Partition{2}, 1, 1) == Rat(1));
    REQUIRE(norm_super_numeric(Partition{1}, 1, 1, Rat(2)) == Catch::Approx(0.5));

    SECTION("exact theta = 1 values agree with the ratio formula") {
        // N_n(empty; 1) = 1 for every n, so ratio and absolute coincide at theta = 1
        for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
            FatHookParams hp(n, m);
            for (const auto& lam : enumerate_fat_hook(hp, 5))
                REQUIRE(norm_super_ratio(lam, n, m).evaluate(Rat(1)) ==
                        norm_super_exact_theta1(lam, n, m));
        }
    }

    SECTION("m = 0 collapses to the classical norm") {
        for (const auto& lam : partitions_of(4, 2))
            REQUIRE(norm_super_exact_theta1(lam, 2, 0) == norm_jack_exact_int(lam, 2, 1));
    }
}

TEST_CASE("kernel basis") {
    REQUIRE(kernel_basis(FatHookParams(1, 1), 1) == std::vector<Partition>{Partition()});
    REQUIRE(kernel_basis(FatHookParams(1, 2), 1) ==
            std::vector<Partition>{Partition(), Partition{1}});
    REQUIRE(kernel_basis(FatHookParams(2, 0), 6).empty());
    REQUIRE(kernel_basis(FatHookParams(0, 2), 6).empty());

    SECTION("kernel diagonal vanishes exactly at theta = 1") {
        for (const auto& lam : kernel_basis(FatHookParams(2, 1), 4)) {
            const BiSymPoly& sp = super_jack(lam, 2, 1);
            REQUIRE(super_inner_exact(sp, sp, 2, 1) == Rat(0));
        }
    }
}

TEST_CASE("norm duality") {
    REQUIRE(norm_duality_check(Partition{1}, 1, 1));
    REQUIRE(norm_duality_check(Partition(), 2, 2));
    for (auto [n, m] : {std::pair{2, 1}, {1, 2}, {2, 2}})
        for (const auto& lam : enumerate_fat_hook(FatHookParams(n, m), 5))
            REQUIRE(norm_duality_check(lam, n, m));
}

TEST_CASE("exact Gram reports") {
    auto rep = gram_exact(FatHookParams(1, 1), 1, ThetaValue::parse("1"));
    REQUIRE(rep.index == std::vector<Partition>{Partition{1}});
    REQUIRE(rep.exact_values[0][0] == Rat(1));
    REQUIRE(rep.method == "exact-ct");

    auto rep2 = gram_exact(FatHookParams(1, 1), 2, ThetaValue::parse("1"));
    REQUIRE(rep2.exact_values[0][1] == Rat(0));
    REQUIRE(rep2.exact_values[0][0] == norm_super_exact_theta1(Partition{2}, 1, 1));
    REQUIRE(rep2.exact_values[1][1] == norm_super_exact_theta1(Partition{1, 1}, 1, 1));
    REQUIRE(rep2.max_offdiag_abs == 0.0);

    SECTION("matrix is symmetric") {
        auto r22 = gram_exact(FatHookParams(2, 2), 4, ThetaValue::parse("1"), true);
        for (std::size_t i = 0; i < r22.index.size(); ++i)
            for (std::size_t j = 0; j < r22.index.size(); ++j)
                REQUIRE(r22.exact_values[i][j] == r22.exact_values[j][i]);
    }

    SECTION("integer theta through the classical route at m = 0") {
        auto rm0 = gram_exact(FatHookParams(2, 0), 5, ThetaValue::parse("2"));
        REQUIRE(rm0.max_offdiag_abs == 0.0);
        for (std::size_t i = 0; i < rm0.index.size(); ++i)
            REQUIRE(rm0.exact_values[i][i] == norm_jack_exact_int(rm0.index[i], 2, 2));
    }

    SECTION("unsupported theta is rejected") {
        REQUIRE_THROWS_AS(gram_exact(FatHookParams(1, 1), 2, ThetaValue::parse("2")),
                          theta_not_one);
        REQUIRE_THROWS_AS(gram_exact(FatHookParams(1, 1), 2, ThetaValue::symbolic()),
                          symbolic_theta_not_allowed);
    }
}

TEST_CASE("positivity on rectangle-containing partitions") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}}) {
        FatHookParams hp(n, m);
        for (const auto& lam : enumerate_fat_hook(hp, 5)) {
            if (!contains_rectangle(lam, hp)) continue;
            for (const Rat& th : {Rat(1, 3), Rat(1), Rat(3)})
                REQUIRE(norm_super_numeric(lam, n, m, th) > 0.0);
        }
    }
}
