#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "csos/identities.hpp"

using namespace csos;

namespace {
double worst(const std::vector<IdentityReport>& r, const std::string& id) {
    double w = 0.0;
    for (const auto& e : r)
        if (e.identity == id) w = std::max(w, e.gap);
    return w;
}
} // namespace

TEST_CASE("summation identities at fixed points") {
    const cplx tau{0.1, 0.9};
    CHECK(check_sum_identity_1(3, 1, {0.17, 0.05}, {0.31, -0.08}, tau) < 1e-12);
    CHECK(check_sum_identity_1(1, 0, {0.17, 0.05}, {0.31, -0.08}, tau) < 1e-13);
    CHECK(check_sum_identity_2(4, {0.22, 0.1}, {-0.13, 0.02}, tau) < 1e-12);
    CHECK(check_sum_identity_2_via_1(4, {0.22, 0.1}, {-0.13, 0.02}, tau) < 1e-12);
    CHECK_THROWS_AS(check_sum_identity_1(0, 0, 0.1, 0.2, tau), ValidationError);
}

TEST_CASE("random summation identities") {
    RandomTestConfig cfg;
    const auto r = run_summation_suite(cfg);
    CHECK(r.size() == 300);
    CHECK(worst(r, "id-sum1") < 1e-10);
    CHECK(worst(r, "id-sum2") < 1e-10);
    CHECK(worst(r, "id-sum2-jacobi") < 1e-10);
    // deterministic given the seed
    const auto again = run_summation_suite(cfg);
    CHECK(again[17].gap == r[17].gap);
}

TEST_CASE("random determinant identities") {
    RandomTestConfig cfg;
    cfg.trials = 30;
    cfg.n_min = 2;
    cfg.n_max = 4;
    for (double ti : {1.0, 0.7}) {
        const auto p = ModelParams::make(1, 3, {0.0, ti}, 8);
        const auto r = run_determinant_suite(cfg, p);
        for (const char* id : {"id-det", "det-X", "id-g", "X_t-independence"}) CHECK(worst(r, id) < 1e-9);
    }
}

TEST_CASE("size mismatch") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    CHECK_THROWS_AS(check_det_identity(2, {}, {}, {0.1}, {0.2, 0.3}, 0.1, 0.2, p), ValidationError);
}
