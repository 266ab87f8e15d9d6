#include <catch2/catch_amalgamated.hpp>

#include "sjack/json_io.hpp"

using namespace sjack;

TEST_CASE("partition JSON") {
    REQUIRE(to_json(Partition{10, 5, 3, 3, 1}).dump() == "[10,5,3,3,1]");
    REQUIRE(to_json(Partition()).dump() == "[]");
    REQUIRE(partition_from_json(Json::parse("[3,1]")) == Partition{3, 1});
}

TEST_CASE("symmetric polynomial JSON schema") {
    Json j = to_json(jack(Partition{2}, 2));
    REQUIRE(j["n"] == 2);
    REQUIRE(j["basis"] == "m");
    REQUIRE(j["terms"].size() == 2);
    REQUIRE(j["terms"][0]["key"] == Json::parse("[2]"));
    REQUIRE(j["terms"][0]["c"] == "1");
    REQUIRE(j["terms"][1]["key"] == Json::parse("[1,1]"));
    REQUIRE(j["terms"][1]["c"] == "(2*t)/(t + 1)");

    Json p = to_json(jack_power_sums(Partition{1, 1}));
    REQUIRE(p["basis"] == "p");
}

TEST_CASE("bisymmetric polynomial JSON schema") {
    Json j = to_json(super_jack(Partition{1}, 1, 1));
    REQUIRE(j["n"] == 1);
    REQUIRE(j["m"] == 1);
    REQUIRE(j["terms"].size() == 2);
    REQUIRE(j["terms"][0]["mu"] == Json::parse("[1]"));
    REQUIRE(j["terms"][0]["nu"] == Json::parse("[]"));
    REQUIRE(j["terms"][0]["c"] == "1");
    REQUIRE(j["terms"][1]["mu"] == Json::parse("[]"));
    REQUIRE(j["terms"][1]["nu"] == Json::parse("[1]"));
    REQUIRE(j["terms"][1]["c"] == "(-1)/(t)");
}

TEST_CASE("eigen data JSON") {
    EigenData d = spectral_data(Partition{2}, 1, 1, RatFunc(Rat(5, 7)), 2);
    Json j = to_json(d);
    REQUIRE(j["lambda"] == Json::parse("[2]"));
    REQUIRE(j["nu"] == Json::parse("[2,0]"));
    REQUIRE(j["eigenvalues"]["1"] == "2");
    REQUIRE(j.contains("h_eigenvalue"));
    REQUIRE(j["rho"].size() == 2);
}

TEST_CASE("gram report round trip") {
    auto rep = gram_exact(FatHookParams(1, 1), 3, ThetaValue::parse("1"), true);
    Json j = to_json(rep);
    GramReport back = gram_report_from_json(j);
    REQUIRE(back.method == rep.method);
    REQUIRE(back.index == rep.index);
    REQUIRE(back.exact_values == rep.exact_values);
    REQUIRE(back.theta == "1");

    SECTION("identical inputs give byte-identical exact output") {
        auto rep2 = gram_exact(FatHookParams(1, 1), 3, ThetaValue::parse("1"), true);
        REQUIRE(to_json(rep2).dump() == j.dump());
    }

    SECTION("numeric report carries its parameters") {
        QuadConfig cfg;
        cfg.grid = 32;
        auto num = gram_numeric(FatHookParams(1, 1), 1, Rat(2), cfg);
        Json jn = to_json(num);
        REQUIRE(jn["xi"] == 1.0);
        REQUIRE(jn["xi_prime"] == 2.0);
        REQUIRE(jn["grid"] == 32);
        GramReport back2 = gram_report_from_json(jn);
        REQUIRE(back2.numeric_values == num.numeric_values);
    }
}
