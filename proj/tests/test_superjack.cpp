#include <catch2/catch_amalgamated.hpp>

#include "sjack/superjack.hpp"

using namespace sjack;

namespace {
const RatFunc t = RatFunc::theta();
const RatFunc one(1);

RatFunc coeff(const BiSymPoly& p, const Partition& mu, const Partition& nu) {
    auto it = p.coeffs.find({mu, nu});
    return it == p.coeffs.end() ? RatFunc(0) : it->second;
}
} // namespace

TEST_CASE("deformed power sums") {
    BiSymPoly p = deformed_power_sum(1, 1, 1);
    REQUIRE(coeff(p, Partition{1}, Partition()) == one);
    REQUIRE(coeff(p, Partition(), Partition{1}) == -t.inverse());

    REQUIRE(deformed_power_sum(2, 2, 0) ==
            [] { BiSymPoly b(2, 0); b.add_term(Partition{2}, Partition(), RatFunc(1)); return b; }());
    BiSymPoly p3 = deformed_power_sum(3, 0, 1);
    REQUIRE(p3.coeffs.size() == 1);
    REQUIRE(coeff(p3, Partition(), Partition{3}) == -t.inverse());
    REQUIRE_THROWS_AS(deformed_power_sum(0, 1, 1), bad_input);
}

TEST_CASE("deformed power sum homomorphism") {
    // p_1^2 -> z^2 - (2/theta) z w + (1/theta^2) w^2 at n = m = 1
    PowerSumExpr e;
    e.add_term(Partition{1, 1}, one);
    BiSymPoly sq = phi(e, 1, 1);
    REQUIRE(coeff(sq, Partition{2}, Partition()) == one);
    REQUIRE(coeff(sq, Partition{1}, Partition{1}) == RatFunc(-2) * t.inverse());
    REQUIRE(coeff(sq, Partition(), Partition{2}) == t.inverse() * t.inverse());

    PowerSumExpr c;
    c.add_term(Partition(), one);
    REQUIRE(phi(c, 2, 1) == BiSymPoly::constant(2, 1, one));

    PowerSumExpr p1;
    p1.add_term(Partition{1}, one);
    REQUIRE(phi(p1, 1, 0) ==
            [] { BiSymPoly b(1, 0); b.add_term(Partition{1}, Partition(), RatFunc(1)); return b; }());
}

TEST_CASE("super-Jack polynomials") {
    // P_(1) = p_1
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
        const BiSymPoly& sp = super_jack(Partition{1}, n, m);
        REQUIRE(coeff(sp, Partition{1}, Partition()) == one);
        REQUIRE(coeff(sp, Partition(), Partition{1}) == -t.inverse());
    }
    REQUIRE(super_jack(Partition{2, 2}, 1, 1).is_zero());

    SECTION("vanishing exactly off the fat hook") {
        for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            FatHookParams hp(n, m);
            for (int d = 0; d <= 6; ++d)
                for (const auto& lam : partitions_of(d))
                    REQUIRE(super_jack(lam, n, m).is_zero() == !in_fat_hook(lam, hp));
        }
    }

    SECTION("m = 0 reduces to the Jack polynomial") {
        for (int d = 0; d <= 6; ++d) {
            for (const auto& lam : partitions_of(d, 2)) {
                const BiSymPoly& sp = super_jack(lam, 2, 0);
                SymPoly p = jack(lam, 2);
                REQUIRE(sp.coeffs.size() == p.coeffs.size());
                for (const auto& [k, c] : p.coeffs) REQUIRE(coeff(sp, k, Partition()) == c);
            }
        }
    }

    SECTION("n = 0 reduces to the dual Jack polynomial at 1/theta") {
        for (int d = 0; d <= 6; ++d) {
            for (const auto& lam : partitions_of(d)) {
                Partition lc = lam.conjugate();
                if (lc.length() > 2) continue;  // outside H_{0,2}
                const BiSymPoly& sp = super_jack(lam, 0, 2);
                SymPoly q = jack_Q(lc, 2);
                // phi sends p_r to -(1/theta) p_r(w) at n = 0; the resulting
                // (-1)^{|lambda|} matches the SP/SQ duality relation
                RatFunc sign(lam.weight() % 2 == 0 ? 1 : -1);
                REQUIRE(sp.coeffs.size() == q.coeffs.size());
                for (const auto& [k, c] : q.coeffs) {
                    RatFunc expect = c.substitute_inverse() * sign;
                    REQUIRE(coeff(sp, Partition(), k) == expect);
                }
            }
        }
    }
}

TEST_CASE("skew-expansion route matches the homomorphism route") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        FatHookParams hp(n, m);
        for (const auto& lam : enumerate_fat_hook(hp, 5))
            REQUIRE(super_jack(lam, n, m) == super_jack_skew_route(lam, n, m));
    }
    REQUIRE_THROWS_AS(super_jack_skew_route(Partition{2, 2}, 1, 1), not_in_fat_hook);

    SECTION("m = 0 collapses the sum to a single term") {
        REQUIRE(super_jack_skew_route(Partition{3, 1}, 2, 0) == super_jack(Partition{3, 1}, 2, 0));
    }
}

TEST_CASE("duality between SP and SQ") {
    REQUIRE(super_jack_dual_check(Partition(), 1, 1));
    REQUIRE(super_jack_dual_check(Partition{1}, 1, 1));
    for (const auto& lam : enumerate_fat_hook(FatHookParams(2, 2), 5))
        REQUIRE(super_jack_dual_check(lam, 2, 2));
}

TEST_CASE("quasi-invariance") {
    REQUIRE(quasi_invariance_check(super_jack(Partition{1}, 1, 1), Rat(3, 2)));
    BiSymPoly m1z(1, 1);
    m1z.add_term(Partition{1}, Partition(), one);
    REQUIRE_FALSE(quasi_invariance_check(m1z, Rat(3, 2)));
    REQUIRE_THROWS_AS(quasi_invariance_check(super_jack(Partition{1}, 1, 0), Rat(2)), bad_input);

    SECTION("all super-Jack polynomials are quasi-invariant") {
        for (const auto& lam : enumerate_fat_hook(FatHookParams(2, 2), 4))
            for (const Rat& th : {Rat(3, 2), Rat(5, 7), Rat(2)})
                REQUIRE(quasi_invariance_check(super_jack(lam, 2, 2), th));
    }
}

TEST_CASE("linear independence of the basis") {
    for (auto [n, m] : {std::pair{1, 1}, {2, 2}}) {
        FatHookParams hp(n, m);
        for (int d = 0; d <= 5; ++d) {
            std::vector<BiSymPoly> block;
            for (const auto& lam : fat_hook_of_weight(hp, d))
                block.push_back(super_jack(lam, n, m));
            REQUIRE(linearly_independent(block));
        }
    }
    // sanity: a dependent family is rejected
    std::vector<BiSymPoly> dep{super_jack(Partition{1}, 1, 1),
                               super_jack(Partition{1}, 1, 1) * RatFunc(2)};
    REQUIRE_FALSE(linearly_independent(dep));
}

TEST_CASE("specialization") {
    BiSymPoly sp = specialize(super_jack(Partition{2}, 1, 1), Rat(2));
    REQUIRE(coeff(sp, Partition{1}, Partition{1}) == RatFunc(Rat(-2, 3)));
    for (const auto& [k, c] : sp.coeffs) REQUIRE(c.is_constant());
}
