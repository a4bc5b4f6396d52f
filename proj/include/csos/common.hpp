#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace csos {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Exit code 2 in the CLI.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exit code 3 in the CLI.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : NumericalError {
    using NumericalError::NumericalError;
};

struct ConvergenceError : NumericalError {
    ConvergenceError(const std::string& what, double last_residual)
        : NumericalError(what), residual(last_residual) {}
    double residual;
};

struct DegenerateError : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace csos
