#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csos/bethe.hpp"
#include "csos/formfactor.hpp"
#include "csos/thermo.hpp"

using namespace csos;

namespace {
cplx pol(const ModelParams& p, Formula f, int t, int eps, int parity = 1) {
    PolarizationQuery q;
    q.formula = f;
    q.t = t;
    q.epsilon = eps;
    q.site_parity = parity;
    return polarization(q, p);
}
} // namespace

// closed form evaluated with mpmath at 30 digits
TEST_CASE("reference polarization (1,3,i), t = 1") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    for (int f = 0; f < 4; ++f)
        CHECK(std::abs(pol(p, Formula(f), 1, 0) - 0.34405625602308128002) < 1e-12);
}

TEST_CASE("the four closed forms agree") {
    for (auto [r, L] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{2, 5}, std::pair{3, 7}}) {
        for (double ti : {1.0, 0.6}) {
            const auto p = ModelParams::make(r, L, {0.0, ti}, 8);
            for (int t = 0; t < L - r; ++t)
                for (int eps = 0; eps < 2; ++eps) {
                    const cplx v2 = pol(p, Formula::result2, t, eps);
                    CHECK(std::abs(pol(p, Formula::result1, t, eps) - v2) < 1e-9);
                    CHECK(std::abs(pol(p, Formula::result3, t, eps) - v2) < 1e-12);
                    CHECK(std::abs(pol(p, Formula::result4, t, eps) - v2) < 1e-10);
                    CHECK(pol(p, Formula::result2, t, 1 - eps) == -v2);
                    CHECK(pol(p, Formula::result2, t, eps, 0) == -v2);
                    CHECK(std::abs(v2.imag()) < 1e-14);
                }
            CHECK(std::abs(pol(p, Formula::result2, 0, 0)) < 1e-12);
        }
    }
}

TEST_CASE("query validation and formula names") {
    const auto p = ModelParams::make(1, 3, {0.0, 1.0}, 8);
    CHECK_THROWS_AS(pol(p, Formula::result2, 2, 0), ValidationError);
    CHECK_THROWS_AS(pol(p, Formula::result2, 0, 2), ValidationError);
    CHECK(parse_formula("result3") == Formula::result3);
    CHECK(to_string(Formula::result4) == "result4");
    CHECK_THROWS_AS(parse_formula("result5"), ValidationError);
}

TEST_CASE("Fredholm determinant") {
    for (double ti : {1.0, 0.5}) {
        const auto p = ModelParams::make(1, 3, {0.0, ti}, 8);
        const cplx c = fredholm_closed(FredholmKind::K_minus_V0, p);
        CHECK(std::abs(fredholm_nystrom(p, 200) - c) < 1e-8 * std::abs(c));
        CHECK(std::abs(c.imag()) < 1e-14);
    }
}

TEST_CASE("finite-size form factors approach the limit") {
    const auto p0 = ModelParams::make(1, 3, {0.0, 0.5}, 8);
    for (auto [x, y] : {std::pair{GroundStateLabel{0, 0}, GroundStateLabel{1, 0}},
                        std::pair{GroundStateLabel{0, 0}, GroundStateLabel{1, 1}},
                        std::pair{GroundStateLabel{1, 0}, GroundStateLabel{0, 1}}}) {
        const cplx lim = ff_limit(y.k - x.k, y.ell - x.ell, 1, p0);
        double prev = 1e300;
        for (int N : {8, 16, 32}) {
            const auto p = ModelParams::make(1, 3, {0.0, 0.5}, N);
            const cplx v = szm_between(solve_ground_state(x, p), solve_ground_state(y, p), 1, p).value;
            const double gap = std::abs(v - lim);
            CHECK(gap < prev);
            prev = gap;
        }
        CHECK(prev < 1e-6);
    }
    CHECK(ff_limit(0, 1, 1, p0) == cplx(0.0, 0.0));
    CHECK(ff_limit(1, 0, 2, p0) == -ff_limit(1, 0, 1, p0));
}

TEST_CASE("opposite-twist limit at L even") {
    const auto p = ModelParams::make(1, 4, {0.0, 1.0}, 8);
    CHECK(std::abs(ff_limit_opposite(1, p)) < 1e-12);
    CHECK_THROWS_AS(ff_limit_opposite(1, ModelParams::make(1, 3, {0.0, 1.0}, 8)), ValidationError);
}
