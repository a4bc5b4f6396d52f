#include "csos/model.hpp"

#include <cmath>
#include <numeric>

#include "csos/bethe.hpp"

namespace csos {

ModelParams ModelParams::make(int r, int L, cplx tau, int N) {
    if (r <= 0 || L <= 0) throw ValidationError("r and L must be positive");
    if (std::gcd(r, L) != 1) throw ValidationError("r and L must be coprime");
    if (!(2 * r < L)) throw ValidationError("need 0 < eta = r/L < 1/2");
    if (!(tau.imag() > 0.0)) throw ValidationError("tau must have positive imaginary part");
    if (N <= 0 || N % 2 != 0) throw ValidationError("N must be a positive even integer");
    ModelParams p;
    p.r = r;
    p.L = L;
    p.tau = tau;
    p.N = N;
    p.n = N / 2;
    p.eta = static_cast<double>(r) / L;
    p.eta_t = -p.eta / tau;
    p.tau_t = -1.0 / tau;
    p.q_t = std::exp(2.0 * pi * I * p.eta_t);
    p.p_t = std::exp(2.0 * pi * I * p.tau_t);
    p.s0 = tau / (2.0 * p.eta);
    if (!(std::abs(p.q_t) < 1.0 && std::abs(p.p_t) < 1.0))
        throw ValidationError("nomes must lie inside the unit disc");
    p.th = Theta(tau);
    p.tht = Theta(p.tau_t);
    return p;
}

cplx bracket(cplx u, const ModelParams& p) { return p.th.th1(p.eta * u); }
cplx bracket_deriv(cplx u, const ModelParams& p) { return p.eta * p.th.d1(p.eta * u); }
cplx bracket_logderiv(cplx u, const ModelParams& p) { return p.eta * p.th.ld(p.eta * u); }

namespace {
cplx checked_den(cplx v) {
    if (std::abs(v) < 1e-300) throw PoleError("singular weight: vanishing denominator");
    return v;
}
} // namespace

cplx weight_b(cplx u, cplx s, const ModelParams& p) {
    return bracket(s + 1.0, p) * bracket(u, p) / checked_den(bracket(s, p) * bracket(u + 1.0, p));
}

cplx weight_c(cplx u, cplx s, const ModelParams& p) {
    return bracket(s + u, p) * bracket(1.0, p) / checked_den(bracket(s, p) * bracket(u + 1.0, p));
}

cplx fn_d(cplx u, const ModelParams& p, const std::vector<cplx>& xi) {
    std::vector<cplx> sites = xi;
    if (sites.empty()) sites.assign(p.N, cplx(0.5, 0.0));
    cplx logsum{0.0, 0.0};
    for (cplx x : sites) {
        const cplx num = bracket(u - x, p);
        if (num == 0.0) return 0.0;
        logsum += std::log(num) - std::log(checked_den(bracket(u - x + 1.0, p)));
    }
    return std::exp(logsum);
}

std::vector<cplx> spectral_roots(const std::vector<double>& z, const ModelParams& p) {
    std::vector<cplx> v;
    v.reserve(z.size());
    for (double x : z) v.push_back(x / p.eta_t);
    return v;
}

cplx eigenvalue_tau(cplx u, const std::vector<cplx>& v, double beta, const ModelParams& p) {
    const cplx omega = std::exp(I * pi * beta);
    const int aleph = 0; // n = N/2 sector
    const double sgn = ((p.r * aleph) % 2 == 0) ? 1.0 : -1.0;
    cplx l1{0.0, 0.0}, l2{0.0, 0.0};
    for (cplx vl : v) {
        const cplx a = bracket(vl - u, p);
        const cplx b = bracket(u - vl, p);
        if (std::abs(a) < 1e-14) throw PoleError("spectral parameter collides with a Bethe root");
        l1 += std::log(bracket(vl - u + 1.0, p)) - std::log(a);
        l2 += std::log(bracket(u - vl + 1.0, p)) - std::log(b);
    }
    const cplx a_u = 1.0;
    return omega * a_u * std::exp(l1) + sgn / omega * fn_d(u, p) * std::exp(l2);
}

cplx eigenvalue_tau(cplx u, const BetheState& state, const ModelParams& p) {
    return eigenvalue_tau(u, spectral_roots(state.roots, p), state.beta, p);
}

} // namespace csos
