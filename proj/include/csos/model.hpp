#pragma once

#include <vector>

#include "csos/common.hpp"
#include "csos/elliptic.hpp"

namespace csos {

struct BetheState;

struct ModelParams {
    int r = 1;
    int L = 3;
    cplx tau{0.0, 1.0};
    int N = 2;

    double eta = 0.0;
    cplx eta_t;   // -eta/tau
    cplx tau_t;   // -1/tau
    cplx q_t;     // e^{2 pi i eta_t}
    cplx p_t;     // e^{2 pi i tau_t}
    cplx s0;      // tau/(2 eta)
    int n = 1;

    Theta th;     // quasi-period tau
    Theta tht;    // quasi-period tau_t

    static ModelParams make(int r, int L, cplx tau, int N);
};

// [u] = theta_1(eta u; tau) and its u-derivative.
cplx bracket(cplx u, const ModelParams& p);
cplx bracket_deriv(cplx u, const ModelParams& p);
cplx bracket_logderiv(cplx u, const ModelParams& p);

cplx weight_b(cplx u, cplx s, const ModelParams& p);
cplx weight_c(cplx u, cplx s, const ModelParams& p);

// d(u) = prod_j [u - xi_j]/[u - xi_j + 1]; homogeneous point xi_j = 1/2 when xi is empty.
cplx fn_d(cplx u, const ModelParams& p, const std::vector<cplx>& xi = {});

// Spectral roots v_j = z_j / eta_t of a solved state.
std::vector<cplx> spectral_roots(const std::vector<double>& z, const ModelParams& p);

// Transfer-matrix eigenvalue for roots v and twist e^{i pi beta}.
cplx eigenvalue_tau(cplx u, const std::vector<cplx>& v, double beta, const ModelParams& p);
cplx eigenvalue_tau(cplx u, const BetheState& state, const ModelParams& p);

} // namespace csos
