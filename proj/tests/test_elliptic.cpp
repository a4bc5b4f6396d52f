#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csos/elliptic.hpp"
#include "csos/linalg.hpp"

using namespace csos;

namespace {
bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }
} // namespace

// reference values from mpmath.jtheta at 30 digits
TEST_CASE("theta values at tau = i") {
    const Theta t(cplx(0.0, 1.0));
    const cplx z{0.3, 0.1};
    CHECK(close(t.th1(z), {0.77365122177117314732, 0.17293153659159266301}, 1e-14));
    CHECK(close(t.th2(z), {0.56026192946014486749, -0.23616652540907108879}, 1e-14));
    CHECK(close(t.th3(z), {0.96783399450056420954, -0.055105662055664269457}, 1e-14));
    CHECK(close(t.th4(z), {1.0321445736572939242, 0.05511889962029563283}, 1e-14));
    const cplx w{-0.7, 0.45};
    CHECK(close(t.th1(w), {-1.5878977357531850021, -1.0928486491011937226}, 1e-14));
    CHECK(close(t.th4(w), {1.2256909154487224325, 0.69280822113899302948}, 1e-14));
    CHECK(close(t.d1_zero(), {2.8486946039877873161, 0.0}, 1e-14));
}

TEST_CASE("theta at a tilted quasi-period") {
    const Theta t(cplx(0.2, 0.7));
    CHECK(close(t.th1({0.4, -0.2}), {1.3835679726638636067, -0.0074476098242834408825}, 1e-14));
}

TEST_CASE("quasi-periodicity and parity") {
    for (cplx tau : {cplx(0.0, 1.0), cplx(0.1, 0.5), cplx(-0.3, 2.0)}) {
        const Theta t(tau);
        for (cplx z : {cplx(0.13, 0.02), cplx(-0.4, 0.3), cplx(0.77, -0.25)}) {
            CHECK(close(t.th1(z + 1.0), -t.th1(z), 1e-13));
            CHECK(close(t.th1(z + tau), -std::exp(-I * pi * tau - 2.0 * pi * I * z) * t.th1(z), 1e-12));
            CHECK(close(t.th1(-z), -t.th1(z), 1e-13));
            CHECK(close(t.ld(z + tau), t.ld(z) - 2.0 * pi * I, 1e-12));
        }
    }
}

TEST_CASE("derivative identities") {
    const Theta t(cplx(0.05, 0.8));
    CHECK(close(t.d1_zero(), pi * t.th2(0.0) * t.th3(0.0) * t.th4(0.0), 1e-13));
    const cplx z{0.21, 0.07};
    const double h = 1e-6;
    const cplx fd = (t.th1(z + h) - t.th1(z - h)) / (2.0 * h);
    CHECK(std::abs(fd - t.d1(z)) < 1e-8);
    CHECK(close(std::exp(t.log_th1(z + 3.0 * t.tau())), t.th1(z + 3.0 * t.tau()), 1e-12));
}

TEST_CASE("Jacobi imaginary transformation") {
    for (cplx tau : {cplx(0.0, 1.0), cplx(0.0, 0.4), cplx(0.2, 1.3)}) {
        for (cplx z : {cplx(0.1, 0.0), cplx(0.3, 0.2)}) {
            auto [a, b] = jacobi_transform(z, tau);
            CHECK(close(a, b, 1e-12));
            auto [c, d] = jacobi_transform(z, tau, true);
            CHECK(close(c, d, 1e-12));
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(Theta(cplx(0.3, 0.0)), ValidationError);
    CHECK_THROWS_AS(Theta(cplx(0.0, -1.0)), ValidationError);
    CHECK_THROWS_AS(Theta(cplx(0.0, 1.0), 1e-3), ValidationError);
    const Theta t;
    CHECK_THROWS_AS(t.ld(0.0), PoleError);
    CHECK_THROWS_AS(t.ld(cplx(1.0, 1.0)), PoleError);
}

TEST_CASE("log determinant") {
    CMatrix m(2, 2);
    m << cplx(1, 2), cplx(0, 1), cplx(3, 0), cplx(-1, 1);
    const cplx d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    CHECK(close(log_determinant(m).value(), d, 1e-14));
    CMatrix s = CMatrix::Ones(3, 3);
    CHECK_THROWS_AS(log_determinant(s), DegenerateError);
    CHECK(std::abs(determinant_ratio(s, CMatrix::Identity(3, 3))) < 1e-15);
    CHECK(wrap_log({1.0, 3.0 * pi}).imag() == doctest::Approx(pi));
}
