#pragma once

#include <map>
#include <string>
#include <vector>

#include "csos/bethe.hpp"
#include "csos/linalg.hpp"
#include "csos/model.hpp"

namespace csos {

struct FormFactorResult {
    cplx value;
    int site = 1;
    double gamma_tilde = 0.0;
    std::map<std::string, cplx> parts;
};

// Raised when a form factor is requested at gamma_tilde in Z (use mean_szm / opposite_omega_ff).
struct WrongEntryPoint : ValidationError {
    using ValidationError::ValidationError;
};

// Transformed Gaudin matrix Phi~ for real roots z.
CMatrix gaudin_matrix(const std::vector<double>& z, const ModelParams& p);

// <state|state>, returned in log form.
LogDet norm_determinant(const BetheState& state, const ModelParams& p);

// Normalized matrix element <bra|sigma^z_m|ket> / (norms)^{1/2}.
FormFactorResult szm_between(const BetheState& bra, const BetheState& ket, int m, const ModelParams& p);

// det[Phi + 2 Q+]/det Phi.
cplx mean_szm(const BetheState& state, int m, const ModelParams& p);

// Normalized form factor between |{u},omega> and |{u},-omega>, L even.
cplx opposite_omega_ff(const BetheState& state, int m, const ModelParams& p);

// Un-normalized matrix element in the original variables (small N only).
cplx raw_ff_sigmaz(const std::vector<cplx>& u, double beta_u, const std::vector<cplx>& v, double beta_v, int m,
                   const ModelParams& p);
cplx raw_ff_sigmaz(const BetheState& bra, const BetheState& ket, int m, const ModelParams& p);
// Gaudin formula in the original variables (small N only).
cplx gaudin_direct(const std::vector<cplx>& u, const ModelParams& p);

// log of <ket|ket>/<bra|bra> in transformed variables.
cplx log_norm_ratio(const BetheState& bra, const BetheState& ket, const ModelParams& p);
// |ratio2 / (omega_y/omega_x)^{2n} - 1|.
double ratio2_gap(const BetheState& bra, const BetheState& ket, const ModelParams& p);

// Diagnostics for the thermodynamic analysis.
double id_detbis_gap(const BetheState& bra, const BetheState& ket, const ModelParams& p);
cplx phi_pm(double y, int sign, const BetheState& bra, const BetheState& ket, const ModelParams& p);
cplx phi_j(int j, const BetheState& bra, const BetheState& ket, const ModelParams& p);
// det Phi~ / ((-2 pi i eta_t N)^n prod rho(y)).
cplx fredholm_norm_ratio(const BetheState& state, const ModelParams& p);

double gamma_tilde(const BetheState& bra, const BetheState& ket);

} // namespace csos
