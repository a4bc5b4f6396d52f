#pragma once

#include <utility>

#include "csos/common.hpp"

namespace csos {

struct ThetaContext {
    cplx quasi_period{0.0, 1.0};
    double tol = 1e-17;

    void validate() const;
};

// theta_kind in {1,2,3,4}; theta_2,3,4 derived from theta_1 by half-period shifts.
cplx theta_eval(int kind, cplx z, const ThetaContext& ctx);
cplx theta1_deriv(cplx z, const ThetaContext& ctx);
cplx theta1_logderiv(cplx z, const ThetaContext& ctx);

// Both sides of Jacobi's imaginary transformation, computed independently.
// second_line=false: theta1 line; true: theta2 <-> theta4 line.
std::pair<cplx, cplx> jacobi_transform(cplx z, cplx tau, bool second_line = false);

// Convenience evaluator bound to one quasi-period.
class Theta {
public:
    explicit Theta(cplx tau = cplx(0.0, 1.0), double tol = 1e-17);

    cplx tau() const { return ctx_.quasi_period; }
    const ThetaContext& context() const { return ctx_; }

    cplx th1(cplx z) const;
    cplx d1(cplx z) const;      // theta_1'(z)
    cplx ld(cplx z) const;      // theta_1'(z)/theta_1(z)
    cplx log_th1(cplx z) const; // some branch of log theta_1(z), finite for large |Im z|
    cplx th2(cplx z) const;
    cplx th3(cplx z) const;
    cplx th4(cplx z) const;
    cplx d1_zero() const { return d1_zero_; }

private:
    ThetaContext ctx_;
    cplx d1_zero_;
};

} // namespace csos
