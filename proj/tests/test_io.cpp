#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csos/io.hpp"

using namespace csos;

TEST_CASE("ModelParams round trip") {
    const auto p = ModelParams::make(2, 5, {0.0, 1.25}, 12);
    const auto q = params_from_json(json::parse(to_json(p).dump()));
    CHECK(q.r == 2);
    CHECK(q.L == 5);
    CHECK(q.N == 12);
    CHECK(q.tau == p.tau);
    CHECK_THROWS_AS(params_from_json(json{{"r", 1}}), ValidationError);
    CHECK_THROWS_AS(params_from_json(json{{"r", 2}, {"L", 4}, {"tau_im", 1.0}, {"N", 8}}), ValidationError);
}

TEST_CASE("BetheState round trip") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    const auto s = solve_ground_state({1, 1}, p);
    const auto j = to_json(s);
    CHECK(j.contains("label"));
    CHECK(j["label"]["ell"] == 1);
    const auto t = state_from_json(json::parse(j.dump()));
    CHECK(t.roots == s.roots);
    CHECK(t.beta == s.beta);
    CHECK(t.label == s.label);
    CHECK(t.N == 8);
}

TEST_CASE("FormFactorResult round trip") {
    FormFactorResult f;
    f.value = {0.1, -0.25};
    f.site = 3;
    f.gamma_tilde = 0.75;
    f.parts["s_sum"] = {1.0, 2.0};
    const auto g = formfactor_from_json(json::parse(to_json(f).dump()));
    CHECK(g.value == f.value);
    CHECK(g.site == 3);
    CHECK(g.parts.at("s_sum") == f.parts.at("s_sum"));
}

TEST_CASE("identity reports and csv") {
    std::vector<IdentityReport> r{{"id-sum1", 3, 1e-15, 42}};
    const auto back = reports_from_json(json::parse(to_json(r).dump()));
    CHECK(back[0].identity == "id-sum1");
    CHECK(back[0].seed == 42);

    std::vector<SweepRow> rows{{8, {0.5, -1e-3}, 1e-4, 1.5}, {12, {0.25, 0.0}, 2e-6, 3.0}};
    const std::string csv = to_csv(rows);
    CHECK(csv.rfind("N,value_re,value_im,gap,runtime_ms\n", 0) == 0);
    const auto rr = rows_from_csv(csv);
    REQUIRE(rr.size() == 2);
    CHECK(rr[1].N == 12);
    CHECK(rr[0].value == rows[0].value);
    CHECK(rr[1].gap == rows[1].gap);
    CHECK_THROWS_AS(rows_from_csv("a,b\n"), ValidationError);
}
