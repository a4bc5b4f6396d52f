#include "csos/elliptic.hpp"

#include <cmath>

namespace csos {

namespace {

constexpr int kMaxTerms = 500;

// z = z0 + a + b*tau with z0 near the fundamental cell.
struct Reduced {
    cplx z0;
    long a;
    long b;
};

Reduced reduce(cplx z, cplx tau) {
    const double bt = std::round(z.imag() / tau.imag());
    cplx z1 = z - bt * tau;
    const double at = std::round(z1.real());
    return {z1 - at, static_cast<long>(at), static_cast<long>(bt)};
}

// log of the factor F with theta1(z0 + a + b tau) = F * theta1(z0).
cplx log_shift_factor(const Reduced& r, cplx tau) {
    const double b = static_cast<double>(r.b);
    cplx lf = -I * pi * b * b * tau - 2.0 * pi * I * b * r.z0;
    if ((r.a + r.b) % 2 != 0) lf += I * pi;
    return lf;
}

// theta1 and theta1' on the reduced argument:
//   theta1(z) = 2 sum_{k>=0} (-1)^k q^{(k+1/2)^2} sin((2k+1) pi z),  q = e^{i pi tau}
void series(cplx z, const ThetaContext& ctx, cplx* val, cplx* der) {
    const cplx tau = ctx.quasi_period;
    cplx s{0.0, 0.0};
    cplx sd{0.0, 0.0};
    double biggest = 0.0;
    int small_run = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
        const double h = k + 0.5;
        const cplx w = std::exp(I * pi * tau * h * h);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const cplx arg = (2.0 * k + 1.0) * pi * z;
        s += sign * w * std::sin(arg);
        if (der) sd += sign * w * (2.0 * k + 1.0) * pi * std::cos(arg);
        const double mag = std::abs(w) * std::cosh((2.0 * k + 1.0) * pi * z.imag()) * (2.0 * k + 1.0);
        biggest = std::max(biggest, mag);
        if (mag < ctx.tol * biggest) {
            if (++small_run >= 3) {
                *val = 2.0 * s;
                if (der) *der = 2.0 * sd;
                return;
            }
        } else {
            small_run = 0;
        }
    }
    throw ConvergenceError("theta series did not converge in 500 terms", 0.0);
}

} // namespace

void ThetaContext::validate() const {
    if (!(quasi_period.imag() > 0.0) || !std::isfinite(quasi_period.real()))
        throw ValidationError("theta quasi-period must have positive imaginary part");
    if (!(tol > 0.0 && tol < 1e-6))
        throw ValidationError("theta tolerance must lie in (0, 1e-6)");
}

cplx theta_eval(int kind, cplx z, const ThetaContext& ctx) {
    ctx.validate();
    const cplx tau = ctx.quasi_period;
    switch (kind) {
    case 1: {
        const Reduced r = reduce(z, tau);
        cplx v;
        series(r.z0, ctx, &v, nullptr);
        return std::exp(log_shift_factor(r, tau)) * v;
    }
    case 2:
        return theta_eval(1, z + 0.5, ctx);
    case 3:
        return theta_eval(4, z + 0.5, ctx);
    case 4:
        return -I * std::exp(I * pi * tau / 4.0 + I * pi * z) * theta_eval(1, z + tau / 2.0, ctx);
    default:
        throw ValidationError("theta kind must be 1, 2, 3 or 4");
    }
}

cplx theta1_deriv(cplx z, const ThetaContext& ctx) {
    ctx.validate();
    const cplx tau = ctx.quasi_period;
    const Reduced r = reduce(z, tau);
    cplx v, d;
    series(r.z0, ctx, &v, &d);
    return std::exp(log_shift_factor(r, tau)) * (d - 2.0 * pi * I * static_cast<double>(r.b) * v);
}

cplx theta1_logderiv(cplx z, const ThetaContext& ctx) {
    ctx.validate();
    const cplx tau = ctx.quasi_period;
    const Reduced r = reduce(z, tau);
    if (std::abs(r.z0) < 1e-12) throw PoleError("theta1 log-derivative evaluated at a lattice zero");
    cplx v, d;
    series(r.z0, ctx, &v, &d);
    return d / v - 2.0 * pi * I * static_cast<double>(r.b);
}

std::pair<cplx, cplx> jacobi_transform(cplx z, cplx tau, bool second_line) {
    ThetaContext c{tau};
    c.validate();
    ThetaContext ct{-1.0 / tau};
    const cplx pref = std::pow(-I * tau, -0.5) * std::exp(-I * pi * z * z / tau);
    if (!second_line) {
        return {theta_eval(1, z, c), -I * pref * theta_eval(1, -z / tau, ct)};
    }
    return {theta_eval(2, z, c), pref * theta_eval(4, -z / tau, ct)};
}

Theta::Theta(cplx tau, double tol) : ctx_{tau, tol} {
    ctx_.validate();
    d1_zero_ = theta1_deriv(0.0, ctx_);
}

cplx Theta::th1(cplx z) const { return theta_eval(1, z, ctx_); }
cplx Theta::d1(cplx z) const { return theta1_deriv(z, ctx_); }
cplx Theta::ld(cplx z) const { return theta1_logderiv(z, ctx_); }
cplx Theta::th2(cplx z) const { return theta_eval(2, z, ctx_); }
cplx Theta::th3(cplx z) const { return theta_eval(3, z, ctx_); }
cplx Theta::th4(cplx z) const { return theta_eval(4, z, ctx_); }

cplx Theta::log_th1(cplx z) const {
    const Reduced r = reduce(z, ctx_.quasi_period);
    cplx v;
    series(r.z0, ctx_, &v, nullptr);
    return log_shift_factor(r, ctx_.quasi_period) + std::log(v);
}

} // namespace csos
