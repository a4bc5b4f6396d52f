#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "csos/common.hpp"
#include "csos/model.hpp"

namespace csos {

struct RandomTestConfig {
    std::uint64_t seed = 7;
    int trials = 100;
    int n_min = 1;
    int n_max = 5;
    // sampled arguments: Re in [-re_box, re_box], Im in [-im_box, im_box]
    double re_box = 0.5;
    double im_box = 0.3;
};

struct IdentityReport {
    std::string identity;
    int n = 0;
    double gap = 0.0;
    std::uint64_t seed = 0;
};

// Gaps |lhs - rhs| / max(1, |rhs|) of the two summation identities.
double check_sum_identity_1(int n, int k, cplx x, cplx y, cplx tau);
double check_sum_identity_2(int n, cplx x, cplx y, cplx tau);
// Identity 2 obtained from identity 1 by the imaginary transformation: the lhs of 2 is
// recomputed from the rhs of 1 at the transformed arguments.
double check_sum_identity_2_via_1(int n, cplx x, cplx y, cplx tau);

struct DetIdentityGaps {
    double det = 0.0;      // det[H_alpha - 2 Q_beta] vs the H, V, Q form
    double det_x = 0.0;    // det X_t vs its closed form
    double residue = 0.0;  // residue identity, worst over j, k and epsilon
    double t_indep = 0.0;  // X_t route at two different t
};

// Determinant identity chain at quasi-period tau_t and shift eta_t (from p).
DetIdentityGaps check_det_identity(int n, const std::array<cplx, 4>& alpha, const std::array<cplx, 2>& beta,
                                   const std::vector<cplx>& x, const std::vector<cplx>& y, cplx t1, cplx t2,
                                   const ModelParams& p);

std::vector<IdentityReport> run_summation_suite(const RandomTestConfig& cfg);
std::vector<IdentityReport> run_determinant_suite(const RandomTestConfig& cfg, const ModelParams& p);

} // namespace csos
