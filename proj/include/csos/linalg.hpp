#pragma once

#include <Eigen/Dense>

#include "csos/common.hpp"

namespace csos {

using CMatrix = Eigen::MatrixXcd;

// det = phase * exp(logabs); |phase| = 1.
struct LogDet {
    cplx phase{1.0, 0.0};
    double logabs = 0.0;

    cplx value() const { return phase * std::exp(logabs); }
    cplx log() const { return std::log(phase) + logabs; }
};

// Partial-pivoting LU. Throws DegenerateError when a pivot vanishes.
LogDet log_determinant(const CMatrix& m);

// Reduce the imaginary part into (-pi, pi].
cplx wrap_log(cplx w);

// det(num)/det(den) as det(den^{-1} num); num may be singular.
cplx determinant_ratio(const CMatrix& num, const CMatrix& den);

} // namespace csos
