#include <catch2/catch_amalgamated.hpp>

#include "sjack/cmsops.hpp"

using namespace sjack;

namespace {
const RatFunc t = RatFunc::theta();
const RatFunc one(1);

FullPoly monomial(int n, int m, std::vector<int> e, RatFunc c = RatFunc(1)) {
    FullPoly p(n, m);
    p.add_term(e, c);
    return p;
}
} // namespace

TEST_CASE("expansion and symmetrization") {
    BiSymPoly m1(2, 0);
    m1.add_term(Partition{1}, Partition(), one);
    FullPoly f = expand(m1);
    REQUIRE(f.coeffs.size() == 2);  // z1 + z2
    REQUIRE(symmetrize_back(f) == m1);

    const BiSymPoly& sp = super_jack(Partition{2}, 1, 1);
    REQUIRE(symmetrize_back(expand(sp)) == sp);

    REQUIRE_THROWS_AS(symmetrize_back(monomial(2, 0, {1, 0})), not_bisymmetric);
    // right orbit sizes but unequal coefficients
    FullPoly skewed(2, 0);
    skewed.add_term({1, 0}, one);
    skewed.add_term({0, 1}, RatFunc(2));
    REQUIRE_THROWS_AS(symmetrize_back(skewed), not_bisymmetric);
}

TEST_CASE("first-order operators") {
    // z d/dz scaling on powers
    FullPoly zk = monomial(1, 1, {4, 0});
    REQUIRE(apply_partial(0, 1, zk, t) == monomial(1, 1, {4, 0}, RatFunc(4)));
    // parity sign on the w side
    FullPoly w1 = monomial(1, 1, {0, 1});
    REQUIRE(apply_partial(1, 1, w1, t) == monomial(1, 1, {0, 1}, -t));
    REQUIRE_THROWS_AS(apply_partial(2, 1, w1, t), bad_input);
    REQUIRE_THROWS_AS(apply_partial(0, 0, w1, t), bad_input);
}

TEST_CASE("second-order recursion by hand") {
    // partial^(2)_1 applied to p_1(z,w;theta) at n = m = 1 gives (z - w)/2
    FullPoly q = expand(deformed_power_sum(1, 1, 1));
    FullPoly expect(1, 1);
    expect.add_term({1, 0}, RatFunc(Rat(1, 2)));
    expect.add_term({0, 1}, RatFunc(Rat(-1, 2)));
    REQUIRE(apply_partial(0, 2, q, t) == expect);
}

TEST_CASE("inexact division flags inputs outside the domain") {
    FullPoly bad = monomial(1, 1, {1, 0});  // z alone is not quasi-invariant
    REQUIRE_THROWS_AS(apply_partial(0, 2, bad, t), inexact_division);
}

TEST_CASE("first integral is the Euler operator") {
    for (const auto& lam : {Partition{1}, Partition{2, 1}, Partition{3, 2}}) {
        const BiSymPoly& sp = super_jack(lam, 2, 1);
        REQUIRE(apply_L(1, sp, t) == sp * RatFunc(lam.weight()));
    }
}

TEST_CASE("eigenvalue extraction") {
    REQUIRE(eigenvalue_of(Partition{1}, 1, 1, 1, t) == one);
    REQUIRE(eigenvalue_of(Partition{2}, 1, 2, 2, t) == RatFunc(2));
    // hand value via the second-order recursion at (1,1)
    REQUIRE(eigenvalue_of(Partition{1}, 2, 1, 1, t) == RatFunc(0));
    REQUIRE_THROWS_AS(eigenvalue_of(Partition{2, 2}, 2, 1, 1, t), not_in_fat_hook);

    SECTION("classical trigonometric eigenvalues at m = 0") {
        // sum_j lambda_j (lambda_j + theta (n + 1 - 2 j))
        for (int n : {2, 3}) {
            for (int d = 0; d <= 4; ++d) {
                for (const auto& lam : partitions_of(d, n)) {
                    RatFunc expect(0);
                    for (int j = 1; j <= n; ++j) {
                        RatFunc lj(lam.part(j));
                        expect += lj * (lj + t * RatFunc(n + 1 - 2 * j));
                    }
                    REQUIRE(eigenvalue_of(lam, 2, n, 0, t) == expect);
                }
            }
        }
    }

    SECTION("m = 0 eigenvalues match the direct Jack action") {
        for (const auto& lam : partitions_of(3, 2)) {
            RatFunc from_super = eigenvalue_of(lam, 2, 2, 0, t);
            // act on the embedded Jack polynomial and extract by hand
            const BiSymPoly& sp = super_jack(lam, 2, 0);
            BiSymPoly img = apply_L(2, sp, t);
            REQUIRE(img == sp * from_super);
        }
    }
}

TEST_CASE("eigen-property across hook shapes") {
    // proportionality is asserted inside eigenvalue_of; a throw fails the test
    RatFunc th(Rat(5, 7));
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}}) {
        for (const auto& lam : enumerate_fat_hook(FatHookParams(n, m), 5)) {
            for (int r = 1; r <= 3; ++r) {
                RatFunc ev = eigenvalue_of(lam, r, n, m, th);
                if (r == 1) REQUIRE(ev == RatFunc(Rat(lam.weight())));
            }
        }
    }
}

TEST_CASE("integrals commute") {
    for (const auto& lam : enumerate_fat_hook(FatHookParams(1, 1), 4)) {
        const BiSymPoly& sp = super_jack(lam, 1, 1);
        REQUIRE(apply_L(2, apply_L(3, sp, t), t) == apply_L(3, apply_L(2, sp, t), t));
    }
}

TEST_CASE("spectral data") {
    auto rho = rho_vector(1, 1, t);
    REQUIRE(rho[0] == RatFunc(Rat(1, 2)));
    REQUIRE(rho[1] == RatFunc(Rat(-1, 2)));

    EigenData empty = spectral_data(Partition(), 2, 1, RatFunc(Rat(5, 7)), 2);
    REQUIRE(empty.eigenvalues.at(1) == RatFunc(0));
    REQUIRE(empty.eigenvalues.at(2) == RatFunc(0));

    EigenData d = spectral_data(Partition{2}, 1, 1, RatFunc(Rat(5, 7)), 3);
    REQUIRE(d.nu == std::vector<long>{2, 0});
    REQUIRE(d.eigenvalues.at(1) == RatFunc(2));
    // h-eigenvalue is (rho, rho)_theta - eig_2
    RatFunc form = indefinite_form(d.rho, d.rho, 1, RatFunc(Rat(5, 7)));
    REQUIRE(d.h_eigenvalue == form - d.eigenvalues.at(2));

    SECTION("quasimomentum layout") {
        EigenData e = spectral_data(Partition{3, 2, 1}, 2, 2, RatFunc(Rat(5, 7)), 1);
        // first n entries are lambda_1..lambda_n, the rest the south parts
        REQUIRE(e.nu == std::vector<long>{3, 2, 1, 0});
    }

    SECTION("joint eigenvalues separate the fat hook up to weight 6") {
        RatFunc th(Rat(5, 7));
        std::vector<std::vector<Rat>> seen;
        for (const auto& lam : enumerate_fat_hook(FatHookParams(2, 2), 6)) {
            std::vector<Rat> tup;
            for (int r = 1; r <= 3; ++r)
                tup.push_back(eigenvalue_of(lam, r, 2, 2, th).constant_value());
            for (const auto& other : seen) REQUIRE(other != tup);
            seen.push_back(std::move(tup));
        }
        // every partition of weight <= 6 satisfies lambda_3 <= 2
        REQUIRE(seen.size() == 30);
    }
}
