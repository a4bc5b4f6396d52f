#include "csos/thermo.hpp"

#include <cmath>
#include <vector>

#include "csos/density.hpp"
#include "csos/linalg.hpp"

namespace csos {

namespace {

constexpr int kMinFactors = 30;
constexpr int kMaxFactors = 5000;

template <class F>
cplx truncated_product(F factor) {
    cplx prod{1.0, 0.0};
    for (int m = 1; m <= kMaxFactors; ++m) {
        const cplx f = factor(m);
        prod *= f;
        if (m >= kMinFactors && std::abs(f - 1.0) < 1e-16) return prod;
    }
    throw ConvergenceError("infinite product did not converge", 0.0);
}

double parity_sign(int k) { return (((k % 2) + 2) % 2 == 0) ? 1.0 : -1.0; }

} // namespace

Formula parse_formula(const std::string& s) {
    if (s == "result1") return Formula::result1;
    if (s == "result2") return Formula::result2;
    if (s == "result3") return Formula::result3;
    if (s == "result4") return Formula::result4;
    throw ValidationError("unknown formula '" + s + "'");
}

std::string to_string(Formula f) {
    switch (f) {
    case Formula::result1: return "result1";
    case Formula::result2: return "result2";
    case Formula::result3: return "result3";
    case Formula::result4: return "result4";
    }
    return "?";
}

void PolarizationQuery::validate(const ModelParams& p) const {
    if (epsilon != 0 && epsilon != 1) throw ValidationError("epsilon must be 0 or 1");
    if (t < 0 || t >= p.L - p.r) throw ValidationError("t must lie in 0..L-r-1");
}

cplx staggered_product(const ModelParams& p) {
    const cplx q = p.q_t;
    const cplx pq = p.p_t / p.q_t;
    return truncated_product([&](int m) {
        const cplx qm = std::pow(q, m);
        const cplx r = std::pow(pq, m);
        return (1.0 - qm) * (1.0 - qm) * (1.0 + r) * (1.0 + r) / ((1.0 + qm) * (1.0 + qm) * (1.0 - r) * (1.0 - r));
    });
}

cplx fredholm_closed(FredholmKind kind, const ModelParams& p, int k) {
    const cplx q = p.q_t;
    const cplx pt = p.p_t;
    const cplx pq = p.p_t / p.q_t;
    const double sg = parity_sign(k);
    auto det_pm = [&](double pm) {
        const cplx d1 = p.tht.d1_zero();
        const cplx head = 1.0 + sg + pm * I * (1.0 - sg) / (2.0 * pi) * d1;
        return head * truncated_product([&](int m) {
                   const cplx a = 1.0 + sg * std::pow(q, m);
                   const cplx b = 1.0 - sg * std::pow(pq, m);
                   const cplx c = 1.0 - std::pow(pt, m);
                   return a * a * b * b / (c * c);
               });
    };
    switch (kind) {
    case FredholmKind::K_minus_V0:
        return 2.0 * (1.0 - p.eta) * truncated_product([&](int m) {
                   const cplx a = 1.0 + std::pow(q, m);
                   const cplx b = 1.0 - std::pow(pq, m);
                   const cplx c = 1.0 - std::pow(pt, m);
                   return a * a * b * b / (c * c);
               });
    case FredholmKind::K_plus_V: return det_pm(+1.0);
    case FredholmKind::K_minus_V: return det_pm(-1.0);
    case FredholmKind::staggered:
        return (det_pm(+1.0) - det_pm(-1.0)) / fredholm_closed(FredholmKind::K_minus_V0, p);
    }
    return 0.0;
}

cplx fredholm_nystrom(const ModelParams& p, int grid) {
    if (grid < 8) throw ValidationError("Nystrom grid too small");
    const double h = 1.0 / grid;
    std::vector<double> y(grid);
    for (int i = 0; i < grid; ++i) y[i] = -0.5 + (i + 0.5) * h;
    CMatrix M(grid, grid);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) M(i, j) = (i == j ? 1.0 : 0.0) + h * (kernel_K(y[i] - y[j], p) - 2.0 * p.eta);
    return log_determinant(M).value();
}

namespace {

// lim_{alpha->0} sum_s e^{2 pi i (c + eta alpha)(s - shift)} th(e s' + g + alpha) th'(0) / (th(e s') th(g + alpha)),
// s' = s0 + s, s = 0..L-1. When g is an integer the alpha -> 0 limit is taken analytically.
cplx regularized_sum(double c, double g, double shift, const ModelParams& p) {
    const Theta& t = p.tht;
    const cplx e = p.eta_t;
    const cplx d1 = t.d1_zero();
    const bool singular = std::abs(g - std::round(g)) < 1e-12;
    cplx acc{0.0, 0.0}, zeroth{0.0, 0.0};
    for (int a = 0; a < p.L; ++a) {
        const cplx sp = p.s0 + static_cast<double>(a);
        const double ds = a - shift;
        const cplx ph = std::exp(2.0 * pi * I * c * ds);
        if (!singular) {
            acc += ph * t.th1(e * sp + g) * d1 / (t.th1(e * sp) * t.th1(g));
        } else {
            zeroth += ph;
            acc += ph * (2.0 * pi * I * p.eta * ds + t.ld(e * sp));
        }
    }
    if (singular && std::abs(zeroth) > 1e-9)
        throw NumericalError("alpha-regularized sum does not have a finite limit");
    return acc;
}

} // namespace

cplx ff_limit(int k, int ell, int m, const ModelParams& p) {
    if (((k % 2) + 2) % 2 == 0) return 0.0;
    const double Lr = p.L - p.r;
    const double g = (p.L * k + 2.0 * ell) / (2.0 * Lr);
    // e^{i pi (2 g - k) s}; the usual e^{i pi (2 g - 1) s} is the k = 1 case
    const double c = g - 0.5 * k;
    // s runs over s0 + a: split the phase into e^{2 pi i c s0} times the a-sum
    const cplx ph0 = std::exp(2.0 * pi * I * c * p.s0);
    const cplx sum = ph0 * regularized_sum(c, g, 0.0, p);
    const double sgn = ((m - 1) % 2 == 0) ? 1.0 : -1.0;
    return sgn * staggered_product(p) * I / (pi * Lr) * sum;
}

cplx ff_limit_opposite(int m, const ModelParams& p) {
    if (p.L % 2 != 0) throw ValidationError("opposite-twist limit needs L even");
    const Theta& t = p.tht;
    cplx acc{0.0, 0.0};
    for (int a = 0; a < p.L; ++a) {
        const cplx sp = p.s0 + static_cast<double>(a);
        acc += ((a % 2 == 0) ? 1.0 : -1.0) * t.ld(p.eta_t * sp);
    }
    acc -= I * pi * p.eta * static_cast<double>(p.L);
    const double sgn = ((m - 1) % 2 == 0) ? 1.0 : -1.0;
    return sgn * staggered_product(p) * I * std::exp(-I * pi * p.s0) / (pi * (p.L - p.r)) * acc;
}

namespace {

// The gauge s0 = -1/(2 eta_t) is used by all four closed forms.
ModelParams gauge_fixed(const ModelParams& p) {
    ModelParams g = p;
    g.s0 = -1.0 / (2.0 * p.eta_t);
    return g;
}

cplx result1(const PolarizationQuery& q, const ModelParams& p0) {
    const ModelParams p = gauge_fixed(p0);
    const double Lr = p.L - p.r;
    cplx acc{0.0, 0.0};
    for (int ell = 0; ell < p.L - p.r; ++ell) {
        const double c = (p.r + 2.0 * ell) / (2.0 * Lr);
        const double g = (p.L + 2.0 * ell) / (2.0 * Lr);
        acc += regularized_sum(c, g, static_cast<double>(q.t), p);
    }
    const double sgn = ((q.site_parity - 1 + q.epsilon) % 2 == 0) ? 1.0 : -1.0;
    return I * sgn / (pi * Lr) * staggered_product(p) * acc;
}

cplx result2(const PolarizationQuery& q, const ModelParams& p) {
    const Theta a(p.eta * p.tau_t);
    const Theta b((1.0 - p.eta) * p.tau_t);
    const double sgn = ((q.site_parity + q.epsilon) % 2 == 0) ? 1.0 : -1.0;
    const cplx z = p.eta_t * static_cast<double>(q.t);
    return sgn * I / pi * a.d1_zero() * b.th1(z) / (a.th2(0.0) * b.th2(z));
}

cplx result3(const PolarizationQuery& q, const ModelParams& p) {
    const cplx qt = p.q_t;
    const cplx pq = p.p_t / p.q_t;
    const cplx qmt = std::pow(qt, -q.t); // q^{-t}
    const cplx qpt = std::pow(qt, q.t);
    cplx prod = truncated_product([&](int m) {
        const cplx qm = std::pow(qt, m);
        const cplx a = std::pow(pq, m) * qmt;
        return (1.0 - qm) * (1.0 - qm) * (1.0 - a) / ((1.0 + qm) * (1.0 + qm) * (1.0 + a));
    });
    prod *= (1.0 - qpt) / (1.0 + qpt); // m = 0 factor of the second product
    prod *= truncated_product([&](int m) {
        const cplx a = std::pow(pq, m) * qpt;
        return (1.0 - a) / (1.0 + a);
    });
    const double sgn = ((q.site_parity - 1 + q.epsilon) % 2 == 0) ? 1.0 : -1.0;
    return sgn * prod;
}

cplx result4(const PolarizationQuery& q, const ModelParams& p) {
    const Theta a(p.tau / p.eta);
    const Theta b(p.tau / (1.0 - p.eta));
    const double sgn = ((q.site_parity + q.epsilon) % 2 == 0) ? 1.0 : -1.0;
    const cplx z = p.eta * static_cast<double>(q.t) / (1.0 - p.eta);
    return sgn * I * p.tau / (pi * p.eta) * a.d1_zero() * b.th1(z) / (a.th4(0.0) * b.th4(z));
}

} // namespace

cplx polarization(const PolarizationQuery& q, const ModelParams& p) {
    q.validate(p);
    switch (q.formula) {
    case Formula::result1: return result1(q, p);
    case Formula::result2: return result2(q, p);
    case Formula::result3: return result3(q, p);
    case Formula::result4: return result4(q, p);
    }
    return 0.0;
}

double identity_result1_eq_result2(const ModelParams& p, const PolarizationQuery& q) {
    PolarizationQuery a = q, b = q;
    a.formula = Formula::result1;
    b.formula = Formula::result2;
    return std::abs(polarization(a, p) - polarization(b, p));
}

} // namespace csos
