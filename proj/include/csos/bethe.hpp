#pragma once

#include <vector>

#include "csos/common.hpp"
#include "csos/model.hpp"

namespace csos {

struct GroundStateLabel {
    int k = 0;   // integer shift n_j = j + k, canonical in {0,1}
    int ell = 0; // twist index, beta = (r n + 2 ell)/L, 0 <= ell < L - r

    bool operator==(const GroundStateLabel&) const = default;
};

struct BetheState {
    GroundStateLabel label;
    std::vector<double> roots; // z_j = eta_t v_j, increasing
    double beta = 0.0;         // omega = e^{i pi beta}
    double residual = 0.0;     // max-norm of the logarithmic Bethe equations
    int N = 0;
    int iterations = 0;

    cplx omega() const { return std::exp(I * pi * beta); }
};

GroundStateLabel canonical_label(GroundStateLabel l, const ModelParams& p);
double twist_beta(const GroundStateLabel& l, const ModelParams& p);
// All 2(L-r) ground-state labels.
std::vector<GroundStateLabel> ground_state_labels(const ModelParams& p);

// Continuous branches: p0(0) = 0, p0(z+1) = p0(z) + 2 pi; same for the phase.
double bare_momentum(double z, const ModelParams& p);
double bare_phase(double z, const ModelParams& p);
double bare_momentum_deriv(double z, const ModelParams& p);
double bare_phase_deriv(double z, const ModelParams& p);

std::vector<double> bethe_residual(const std::vector<double>& roots, const GroundStateLabel& label,
                                   const ModelParams& p);

struct SolveOptions {
    int max_iter = 50;
    double target = 1e-13;     // stop once the residual is below this
    double accept = 1e-11;     // roundoff floor that still counts as solved
};

BetheState solve_ground_state(const GroundStateLabel& label, const ModelParams& p,
                              const SolveOptions& opt = {});

// Predicted x_j - y_j from the thermodynamic density, one entry per root of y.
std::vector<double> predicted_root_shift(const BetheState& x, const BetheState& y, const ModelParams& p);

// Thermodynamic prediction of sum_j x_j.
double sum_rule_prediction(const GroundStateLabel& l, const ModelParams& p);

// Derivative of the finite-size counting function.
double counting_deriv(double z, const BetheState& state, const ModelParams& p);

} // namespace csos
