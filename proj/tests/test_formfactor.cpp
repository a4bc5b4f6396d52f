#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csos/bethe.hpp"
#include "csos/density.hpp"
#include "csos/formfactor.hpp"
#include "csos/oracle.hpp"
#include "csos/thermo.hpp"

using namespace csos;

TEST_CASE("transformed and direct Gaudin determinants agree") {
    for (int N : {2, 4, 6}) {
        const auto p = ModelParams::make(1, 3, {0.0, 1.0}, N);
        for (const auto& l : ground_state_labels(p)) {
            const auto s = solve_ground_state(l, p);
            const cplx a = norm_determinant(s, p).value();
            const cplx b = gaudin_direct(spectral_roots(s.roots, p), p);
            CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
            const auto bra = oracle::build_bethe_vector(s, true, p);
            const auto ket = oracle::build_bethe_vector(s, false, p);
            CHECK(std::abs(a - oracle::pair(bra, ket)) < 1e-10 * std::abs(a));
        }
    }
}

TEST_CASE("mean value vanishes at the homogeneous point") {
    for (int N : {2, 8, 16}) {
        const auto p = ModelParams::make(1, 3, {0.0, 1.0}, N);
        for (const auto& l : ground_state_labels(p))
            for (int m : {1, 2}) CHECK(std::abs(mean_szm(solve_ground_state(l, p), m, p)) < 1e-12);
    }
}

TEST_CASE("selection rule: equal k parity gives zero") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 16);
    const auto x = solve_ground_state({0, 0}, p);
    const auto y = solve_ground_state({0, 1}, p);
    CHECK(std::abs(szm_between(x, y, 1, p).value) < 1e-12);
}

TEST_CASE("site dependence is a pure phase") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 12);
    const auto x = solve_ground_state({0, 0}, p);
    const auto y = solve_ground_state({1, 0}, p);
    const double a = std::abs(szm_between(x, y, 1, p).value);
    for (int m = 2; m <= 12; ++m) CHECK(std::abs(szm_between(x, y, m, p).value) == doctest::Approx(a).epsilon(1e-11));
    CHECK_THROWS_AS(szm_between(x, y, 0, p), ValidationError);
    CHECK_THROWS_AS(szm_between(x, y, 13, p), ValidationError);
}

TEST_CASE("entry points") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    const auto x = solve_ground_state({0, 0}, p);
    CHECK_THROWS_AS(szm_between(x, x, 1, p), WrongEntryPoint);
    CHECK_THROWS_AS(opposite_omega_ff(x, 1, p), ValidationError);
    CHECK_THROWS_AS(raw_ff_sigmaz(x, solve_ground_state({1, 0}, ModelParams::make(1, 3, {0.0, 1.0}, 10)), 1,
                                  ModelParams::make(1, 3, {0.0, 1.0}, 10)),
                    ValidationError);
}

TEST_CASE("swapping bra and ket") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 4);
    const auto x = solve_ground_state({0, 0}, p);
    const auto y = solve_ground_state({1, 1}, p);
    const auto a = szm_between(x, y, 1, p), b = szm_between(y, x, 1, p);
    CHECK(a.gamma_tilde == doctest::Approx(-b.gamma_tilde));
    const cplx nx = norm_determinant(x, p).value(), ny = norm_determinant(y, p).value();
    for (const auto& [u, v, r] : {std::tuple{x, y, a}, std::tuple{y, x, b}}) {
        const cplx raw = raw_ff_sigmaz(u, v, 1, p);
        CHECK(std::abs(r.value * r.value * nx * ny - raw * raw) < 1e-10 * std::abs(raw * raw));
    }
}

TEST_CASE("opposite twist at L even") {
    const auto p = ModelParams::make(1, 4, {0.0, 1.0}, 4);
    const auto s = solve_ground_state({0, 0}, p);
    const auto v = spectral_roots(s.roots, p);
    const auto bra = oracle::build_bethe_vector(v, s.beta, true, p);
    const auto ket = oracle::build_bethe_vector(v, s.beta - 1.0, false, p);
    const cplx n1 = oracle::pair(bra, oracle::build_bethe_vector(v, s.beta, false, p));
    const cplx n2 = oracle::pair(oracle::build_bethe_vector(v, s.beta - 1.0, true, p), ket);
    for (int m = 1; m <= 4; ++m) {
        const cplx d = oracle::direct_sigma_z(bra, ket, m);
        const cplx f = opposite_omega_ff(s, m, p);
        CHECK(std::abs(f * f - d * d / (n1 * n2)) < 1e-10);
    }
}

TEST_CASE("determinant identity at solved states") {
    for (int N : {8, 16}) {
        const auto p = ModelParams::make(1, 3, {0.0, 1.0}, N);
        const auto x = solve_ground_state({0, 0}, p);
        for (const GroundStateLabel l : {GroundStateLabel{1, 0}, GroundStateLabel{1, 1}}) {
            CHECK(id_detbis_gap(x, solve_ground_state(l, p), p) < 1e-10);
        }
    }
}

TEST_CASE("asymptotic lemmas at a small nome") {
    const auto p = ModelParams::make(1, 3, {0.0, 0.5}, 48);
    const auto x = solve_ground_state({0, 0}, p);
    const auto y = solve_ground_state({1, 0}, p);
    const double gt = gamma_tilde(x, y);
    for (int i = 0; i < 10; ++i) {
        const double z = -0.5 + (i + 0.5) / 10;
        CHECK(std::abs(phi_pm(z, 1, x, y, p) - std::exp(I * pi * gt)) < 1e-6);
        CHECK(std::abs(phi_pm(z, -1, x, y, p) - std::exp(-I * pi * gt)) < 1e-6);
    }
    for (int j = 0; j < p.n; ++j)
        CHECK(std::abs(phi_j(j, x, y, p) * rho_eval(y.roots[j], p) - std::sin(pi * gt) * p.tht.d1_zero() / pi) < 1e-6);
    CHECK(ratio2_gap(x, y, p) < 1e-6);
    const cplx fc = fredholm_closed(FredholmKind::K_minus_V0, p);
    CHECK(std::abs(fredholm_norm_ratio(x, p) - fc) < 1e-6 * std::abs(fc));
}
