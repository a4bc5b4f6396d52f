#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csos/density.hpp"

using namespace csos;

// rho from the theta-quotient form, evaluated with mpmath at 30 digits
TEST_CASE("density reference values at (1,3,i)") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    CHECK(rho_eval(0.0, p) == doctest::Approx(1.5004842361798948986).epsilon(1e-13));
    CHECK(rho_eval(0.2, p) == doctest::Approx(0.44687409720890070845).epsilon(1e-13));
    CHECK(rho_eval(0.45, p) == doctest::Approx(0.059991345078361919903).epsilon(1e-12));
}

TEST_CASE("Fourier and product forms agree") {
    for (auto [r, L, ti] : {std::tuple{1, 3, 1.0}, std::tuple{1, 5, 0.7}, std::tuple{2, 5, 1.3}}) {
        const auto p = ModelParams::make(r, L, {0.0, ti}, 8);
        for (int i = 0; i <= 20; ++i) {
            const double z = -0.5 + i / 20.0;
            CHECK(std::abs(rho_eval(z, p) - rho_product(z, p)) < 1e-12);
        }
    }
}

TEST_CASE("normalization, symmetry, periodicity") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    CHECK(rho_antideriv(0.5, p) - rho_antideriv(-0.5, p) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(rho_antideriv(0.0, p) == 0.0);
    for (double z : {0.1, 0.27, 0.49}) {
        CHECK(rho_eval(z, p) == doctest::Approx(rho_eval(-z, p)).epsilon(1e-14));
        CHECK(rho_eval(z + 1.0, p) == doctest::Approx(rho_eval(z, p)).epsilon(1e-13));
        CHECK(rho_eval(z, p) > 0.0);
        CHECK(kernel_K(z, p) == doctest::Approx(kernel_K(-z, p)).epsilon(1e-13));
    }
}

TEST_CASE("Lieb equation") {
    for (double ti : {1.0, 0.5}) {
        const auto p = ModelParams::make(1, 3, {0.0, ti}, 8);
        CHECK(lieb_residual(p, 256) < 1e-12);
    }
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    CHECK_THROWS_AS(lieb_residual(p, 16), ValidationError);
    CHECK(fourier_cutoff(p) >= 8);
}
