#include "csos/density.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "csos/bethe.hpp"

namespace csos {

int fourier_cutoff(const ModelParams& p) {
    const double aq = std::abs(p.q_t);
    const int m = static_cast<int>(std::ceil(2.0 * std::log(1e-17) / std::log(aq))) + 2;
    return std::max(m, 8);
}

FourierPair fourier_coeffs(int m, const ModelParams& p) {
    if (m == 0) return {2.0 * pi, 1.0};
    const double a = std::abs(m);
    const cplx qa = std::pow(p.q_t, a);
    const cplx pa = std::pow(p.p_t, a);
    const cplx pq = std::pow(p.p_t / p.q_t, a);
    const cplx pqq = std::pow(p.p_t / (p.q_t * p.q_t), a);
    const cplx pm = 2.0 * pi * std::pow(p.q_t, a / 2.0) * (1.0 - pq) / (1.0 - pa);
    const cplx km = qa * (1.0 - pqq) / (1.0 - pa);
    return {pm, km};
}

double kernel_K(double z, const ModelParams& p) {
    const cplx v = I / (2.0 * pi) * (p.tht.ld(z + p.eta_t) - p.tht.ld(z - p.eta_t));
    return v.real();
}

namespace {
double rho_coeff(int m, const ModelParams& p) {
    return (1.0 / (2.0 * std::cosh(I * pi * static_cast<double>(m) * p.eta_t))).real();
}
} // namespace

double rho_eval(double z, const ModelParams& p) {
    const int M = fourier_cutoff(p);
    double s = 0.5;
    for (int m = 1; m <= M; ++m) s += 2.0 * rho_coeff(m, p) * std::cos(2.0 * pi * m * z);
    return s;
}

double rho_antideriv(double z, const ModelParams& p) {
    const int M = fourier_cutoff(p);
    double s = 0.5 * z;
    for (int m = 1; m <= M; ++m) s += 2.0 * rho_coeff(m, p) * std::sin(2.0 * pi * m * z) / (2.0 * pi * m);
    return s;
}

double rho_product(double z, const ModelParams& p) {
    cplx prod{1.0, 0.0};
    for (int m = 1; m < 2000; ++m) {
        const cplx qm = std::pow(p.q_t, m);
        const cplx f = (1.0 - qm) * (1.0 - qm) / ((1.0 + qm) * (1.0 + qm));
        prod *= f;
        if (m >= 30 && std::abs(f - 1.0) < 1e-17) break;
    }
    const ThetaContext c{p.eta_t};
    return (0.5 * prod * theta_eval(3, z, c) / theta_eval(4, z, c)).real();
}

double lieb_residual(const ModelParams& p, int grid_size) {
    if (grid_size < 64) throw ValidationError("lieb_residual needs grid_size >= 64");
    const int G = grid_size;
    std::vector<double> w(G), rho(G);
    for (int i = 0; i < G; ++i) {
        w[i] = -0.5 + static_cast<double>(i) / G;
        rho[i] = rho_eval(w[i], p);
    }
    double worst = 0.0;
    for (int i = 0; i < G; ++i) {
        double integral = 0.0;
        for (int j = 0; j < G; ++j) integral += kernel_K(w[i] - w[j], p) * rho[j];
        integral /= G;
        const double p0d = bare_momentum_deriv(w[i], p);
        worst = std::max(worst, std::abs(rho[i] + integral - p0d / (2.0 * pi)));
    }
    return worst;
}

double thermo_counting(double z, const BetheState& state, const ModelParams& p) {
    const double sx = std::accumulate(state.roots.begin(), state.roots.end(), 0.0);
    const int n = static_cast<int>(state.roots.size());
    const double N = 2.0 * n;
    return 2.0 * rho_antideriv(z, p) + (n + 1) / N - 2.0 * sx / N;
}

} // namespace csos
