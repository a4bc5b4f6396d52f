#pragma once

#include <vector>

#include "csos/bethe.hpp"
#include "csos/linalg.hpp"
#include "csos/model.hpp"

namespace csos::oracle {

inline constexpr int kMaxSites = 6;

// One spin-space vector (or row vector, for duals) per height s0 + a, a = 0..L-1.
struct DynamicalVector {
    std::vector<Eigen::VectorXcd> blocks;
    int N = 0;
    int L = 0;
    cplx s0;
};

// Entries of the monodromy matrix at fixed height s, each 2^N x 2^N.
struct MonodromyBlocks {
    CMatrix A, B, C, D;
};

// T(u;s) = R_{0N}(u - xi_N; s + sum_{k<N} sz_k) ... R_{01}(u - xi_1; s).
MonodromyBlocks monodromy_at(cplx u, cplx s, const ModelParams& p);
// Blocks for every height of the orbit s0 + Z/LZ.
std::vector<MonodromyBlocks> build_monodromy(cplx u, const ModelParams& p);

// Ket: omega^s prod [1]/[s-j] B(v_1;s)...B(v_n;s-n+1)|0>.
// Dual: <0|C(v_n;s-n)...C(v_1;s-1) omega^{-s} prod_{j<n} [s+j]/[1].
DynamicalVector build_bethe_vector(const std::vector<cplx>& v, double beta, bool dual, const ModelParams& p);
DynamicalVector build_bethe_vector(const BetheState& state, bool dual, const ModelParams& p);

// (t f)(s) = A(u;s) f(s+1) + D(u;s) f(s-1).
DynamicalVector apply_transfer(cplx u, const DynamicalVector& f, const ModelParams& p);

// (1/L) sum_s bra(s) . ket(s), bilinear.
cplx pair(const DynamicalVector& bra, const DynamicalVector& ket);

// pair(bra, sigma^z_m ket), m = 1..N.
cplx direct_sigma_z(const DynamicalVector& bra, const DynamicalVector& ket, int m);

// Relative residual || t psi - lambda psi || / (|lambda| || psi ||) and the Rayleigh quotient lambda.
struct EigenCheck {
    double residual;
    cplx rayleigh;
};
EigenCheck eigen_check(cplx u, const DynamicalVector& ket, const ModelParams& p);

} // namespace csos::oracle
