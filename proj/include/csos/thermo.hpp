#pragma once

#include <string>

#include "csos/common.hpp"
#include "csos/model.hpp"

namespace csos {

enum class FredholmKind { K_minus_V0, K_plus_V, K_minus_V, staggered };

enum class Formula { result1, result2, result3, result4 };

Formula parse_formula(const std::string& s);
std::string to_string(Formula f);

struct PolarizationQuery {
    int epsilon = 0;     // 0 or 1
    int t = 0;           // 0..L-r-1
    int site_parity = 1; // m mod 2 (1 for odd sites)
    Formula formula = Formula::result2;

    void validate(const ModelParams& p) const;
};

// Closed products for the Fredholm determinants. `k` is the parity used by the
// K_plus_V / K_minus_V kinds; `staggered` is the ratio (det+ - det-)/det0 at odd k.
cplx fredholm_closed(FredholmKind kind, const ModelParams& p, int k = 1);

// det(I + h (K(y_i - y_j) - 2 eta)) on a periodic grid of `grid` points.
cplx fredholm_nystrom(const ModelParams& p, int grid);

// prod_m (1-q^m)^2 (1+p^m q^-m)^2 / ((1+q^m)^2 (1-p^m q^-m)^2)
cplx staggered_product(const ModelParams& p);

// N -> infinity value of the normalized form factor for label differences (k, ell).
cplx ff_limit(int k, int ell, int m, const ModelParams& p);

// N -> infinity opposite-twist form factor (L even).
cplx ff_limit_opposite(int m, const ModelParams& p);

cplx polarization(const PolarizationQuery& q, const ModelParams& p);

// |result1 - result2| for the query.
double identity_result1_eq_result2(const ModelParams& p, const PolarizationQuery& q);

} // namespace csos
