#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "csos/bethe.hpp"
#include "csos/density.hpp"

using namespace csos;

namespace {
double total(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }
} // namespace

TEST_CASE("labels") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    CHECK(ground_state_labels(p).size() == 4);
    CHECK(ground_state_labels(ModelParams::make(2, 5, {0.0, 1.0}, 8)).size() == 6);
    CHECK(canonical_label({3, 1}, p) == GroundStateLabel{1, 1});
    CHECK(canonical_label({-2, 0}, p) == GroundStateLabel{0, 0});
    CHECK_THROWS_AS(canonical_label({0, 2}, p), ValidationError);
    CHECK_THROWS_AS(canonical_label({0, -1}, p), ValidationError);
    CHECK(twist_beta({0, 1}, p) == doctest::Approx((1.0 * 4 + 2) / 3));
}

// roots from an independent Python prototype (Brent inversion of the counting function + Newton)
TEST_CASE("reference roots (1,3,i), N=8, label (0,0)") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    const auto s = solve_ground_state({0, 0}, p);
    const std::vector<double> ref{-0.04300377140839407, 0.04300377140839406, 0.17333300421106312, 0.826666995788937};
    REQUIRE(s.roots.size() == ref.size());
    for (std::size_t j = 0; j < ref.size(); ++j) CHECK(s.roots[j] == doctest::Approx(ref[j]).epsilon(1e-11));
    CHECK(s.beta == doctest::Approx(4.0 / 3));
}

TEST_CASE("every label solves for N = 8..32") {
    for (auto [r, L] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 5}}) {
        for (int N = 8; N <= 32; N += 4) {
            const auto p = ModelParams::make(r, L, {0.0, 1.0}, N);
            for (const auto& l : ground_state_labels(p)) {
                const auto s = solve_ground_state(l, p);
                CHECK(s.residual < 1e-11);
                CHECK(std::is_sorted(s.roots.begin(), s.roots.end()));
                CHECK(static_cast<int>(s.roots.size()) == N / 2);
                double worst = 0.0;
                for (double f : bethe_residual(s.roots, l, p)) worst = std::max(worst, std::abs(f));
                CHECK(worst == doctest::Approx(s.residual).epsilon(1e-3));
            }
        }
    }
}

TEST_CASE("sum rule") {
    // exact for k = 0 at every N
    for (int N : {8, 16, 24}) {
        const auto p = ModelParams::make(1, 3, {0.0, 1.0}, N);
        for (int ell = 0; ell < 2; ++ell) {
            const auto s = solve_ground_state({0, ell}, p);
            CHECK(std::abs(total(s.roots) - sum_rule_prediction(s.label, p)) < 1e-12);
        }
    }
    // exponentially small for k = 1 once the nome is small enough
    const auto p = ModelParams::make(1, 3, {0.0, 0.5}, 48);
    const auto s = solve_ground_state({1, 0}, p);
    CHECK(std::abs(total(s.roots) - sum_rule_prediction(s.label, p)) < 1e-8);
}

TEST_CASE("root shift prediction") {
    const auto p = ModelParams::make(1, 3, {0.0, 0.5}, 32);
    const auto x = solve_ground_state({0, 0}, p);
    const auto y = solve_ground_state({1, 1}, p);
    const auto d = predicted_root_shift(x, y, p);
    for (std::size_t j = 0; j < d.size(); ++j) CHECK(std::abs(x.roots[j] - y.roots[j] - d[j]) < 1e-6);
}

TEST_CASE("counting function derivative is the density at large N") {
    const auto p = ModelParams::make(1, 3, {0.0, 0.5}, 48);
    const auto s = solve_ground_state({0, 0}, p);
    for (double z : {0.0, 0.2, 0.4}) CHECK(counting_deriv(z, s, p) / 2.0 == doctest::Approx(rho_eval(z, p)).epsilon(1e-6));
}

TEST_CASE("degenerate roots are rejected") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 4);
    CHECK_THROWS_AS(bethe_residual({0.1, 1.1}, {0, 0}, p), DegenerateError);
}
