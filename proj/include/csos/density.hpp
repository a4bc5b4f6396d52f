#pragma once

#include "csos/common.hpp"
#include "csos/model.hpp"

namespace csos {

struct BetheState;

struct FourierPair {
    cplx p_m; // Fourier coefficient of p0'
    cplx k_m; // Fourier coefficient of K
};

// Number of retained Fourier modes: |q_t|^{cutoff/2} < 1e-17.
int fourier_cutoff(const ModelParams& p);

FourierPair fourier_coeffs(int m, const ModelParams& p);

// K(z) = theta'/theta(z + eta_t) - theta'/theta(z - eta_t), times i/(2 pi).
double kernel_K(double z, const ModelParams& p);

// rho from its Fourier series, and from the theta-quotient product form.
double rho_eval(double z, const ModelParams& p);
double rho_product(double z, const ModelParams& p);
// Antiderivative of rho from 0, term by term.
double rho_antideriv(double z, const ModelParams& p);

// max_z |rho(z) + int K(z-w) rho(w) dw - p0'(z)/(2 pi)| on a periodic trapezoid grid.
double lieb_residual(const ModelParams& p, int grid_size);

// Thermodynamic counting function of a solved state.
double thermo_counting(double z, const BetheState& state, const ModelParams& p);

} // namespace csos
