#include "csos/identities.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "csos/elliptic.hpp"
#include "csos/linalg.hpp"

namespace csos {

namespace {

double rel_gap(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Each theta evaluated through the imaginary transformation.
cplx th1_via_jacobi(cplx z, cplx tau) {
    const Theta dual(-1.0 / tau);
    return -I * std::pow(-I * tau, -0.5) * std::exp(-I * pi * z * z / tau) * dual.th1(-z / tau);
}

cplx th1p0_via_jacobi(cplx tau) {
    // derivative at 0 of the transformed expression: -i (-i tau)^{-1/2} (-1/tau) theta1'(0; -1/tau)
    const Theta dual(-1.0 / tau);
    return -I * std::pow(-I * tau, -0.5) * (-1.0 / tau) * dual.d1_zero();
}

} // namespace

double check_sum_identity_1(int n, int k, cplx x, cplx y, cplx tau) {
    if (n < 1) throw ValidationError("n must be positive");
    const Theta a(tau), b(static_cast<double>(n) * tau);
    cplx lhs{0.0, 0.0};
    for (int l = 0; l < n; ++l) {
        const double f = static_cast<double>(l) / n;
        lhs += std::exp(-2.0 * pi * I * static_cast<double>(k) * f) * a.th1(x + y + f) * a.d1_zero() /
               (a.th1(x) * a.th1(y + f));
    }
    lhs /= static_cast<double>(n);
    const cplx kt = static_cast<double>(k) * tau;
    const cplx rhs = std::exp(2.0 * pi * I * static_cast<double>(k) * y) *
                     b.th1(x + static_cast<double>(n) * y + kt) * b.d1_zero() /
                     (b.th1(x + kt) * b.th1(static_cast<double>(n) * y));
    return rel_gap(lhs, rhs);
}

namespace {
cplx sum2_rhs(int n, cplx x, cplx y, cplx tau) {
    const Theta b(tau / static_cast<double>(n));
    const double dn = n;
    return b.th1(x / dn + y) * b.d1_zero() / (b.th1(x / dn) * b.th1(y));
}
} // namespace

double check_sum_identity_2(int n, cplx x, cplx y, cplx tau) {
    if (n < 1) throw ValidationError("n must be positive");
    const Theta a(tau);
    cplx lhs{0.0, 0.0};
    for (int l = 0; l < n; ++l) {
        const cplx f = static_cast<double>(l) / n * tau;
        lhs += std::exp(2.0 * pi * I * static_cast<double>(l) / static_cast<double>(n) * x) * a.th1(x + y + f) *
               a.d1_zero() / (a.th1(x) * a.th1(y + f));
    }
    return rel_gap(lhs, sum2_rhs(n, x, y, tau));
}

double check_sum_identity_2_via_1(int n, cplx x, cplx y, cplx tau) {
    cplx lhs{0.0, 0.0};
    const cplx d1 = th1p0_via_jacobi(tau);
    for (int l = 0; l < n; ++l) {
        const cplx f = static_cast<double>(l) / n * tau;
        lhs += std::exp(2.0 * pi * I * static_cast<double>(l) / static_cast<double>(n) * x) *
               th1_via_jacobi(x + y + f, tau) * d1 / (th1_via_jacobi(x, tau) * th1_via_jacobi(y + f, tau));
    }
    return rel_gap(lhs, sum2_rhs(n, x, y, tau));
}

DetIdentityGaps check_det_identity(int n, const std::array<cplx, 4>& al, const std::array<cplx, 2>& be,
                                   const std::vector<cplx>& x, const std::vector<cplx>& y, cplx t1, cplx t2,
                                   const ModelParams& p) {
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw ValidationError("root sets must have n elements");
    const Theta& th = p.tht;
    auto T = [&](cplx z) { return th.th1(z); };
    const cplx e = p.eta_t;
    cplx g{0.0, 0.0};
    for (int j = 0; j < n; ++j) g += y[j] - x[j];
    const cplx tg = T(g);

    // H~_alpha and Q~_beta
    CMatrix Ht(n, n), Qt(n, n);
    cplx qprod{1.0, 0.0};
    for (int l = 0; l < n; ++l) qprod *= T(x[l] + e / 2.0) / T(y[l] + e / 2.0);
    for (int j = 0; j < n; ++j) {
        cplx pp{1.0, 0.0}, pm{1.0, 0.0};
        for (int l = 0; l < n; ++l) {
            pp *= T(x[l] - y[j] + e) / T(y[l] - y[j] + e);
            pm *= T(x[l] - y[j] - e) / T(y[l] - y[j] - e);
        }
        for (int i = 0; i < n; ++i) {
            const cplx d = x[i] - y[j];
            const cplx base = T(d + g) / T(d);
            Ht(i, j) = (al[0] * base - al[1] * T(d + g + e) / T(d + e)) / tg * pp -
                       (al[2] * base - al[3] * T(d + g - e) / T(d - e)) / tg * pm;
        }
    }
    for (int i = 0; i < n; ++i) {
        const cplx v = (be[0] * T(x[i] - e / 2.0 + g) / T(x[i] - e / 2.0) -
                        be[1] * T(x[i] + e / 2.0 + g) / T(x[i] + e / 2.0)) /
                       tg * qprod;
        for (int j = 0; j < n; ++j) Qt(i, j) = v;
    }
    const cplx lhs = log_determinant(Ht - 2.0 * Qt).value();

    // H_alpha, V_alpha, Q_beta
    CMatrix H(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            H(j, k) = (al[1] * th.ld(y[j] - y[k] + e) - al[3] * th.ld(y[j] - y[k] - e)) / th.d1_zero();
    for (int j = 0; j < n; ++j) {
        cplx f{1.0, 0.0}, pp{1.0, 0.0}, pm{1.0, 0.0};
        for (int l = 0; l < n; ++l) {
            if (l != j) f *= T(y[j] - y[l]);
            f /= T(y[j] - x[l]);
            pp *= T(x[l] - y[j] + e) / T(y[l] - y[j] + e);
            pm *= T(x[l] - y[j] - e) / T(y[l] - y[j] - e);
        }
        H(j, j) += f * (al[0] * pp - al[2] * pm);
    }
    const cplx V = (al[1] - al[3]) / 2.0;
    cplx qp{1.0, 0.0};
    for (int l = 0; l < n; ++l) qp *= T(x[l] + e / 2.0) * T(y[l] - e / 2.0) / (T(x[l] - e / 2.0) * T(y[l] + e / 2.0));
    const cplx Q = be[1] - be[0] * qp;
    CMatrix Hp = H, Hm = H;
    Hp.array() += (V - Q);
    Hm.array() -= (V - Q);
    cplx vand{1.0, 0.0};
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) vand *= T(x[j] - x[k]) / T(y[j] - y[k]);
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    const cplx rhs = sgn / tg * vand * (log_determinant(Hp).value() - log_determinant(Hm).value());

    DetIdentityGaps out;
    out.det = std::abs(lhs - rhs) / std::max(std::abs(rhs), std::abs(lhs));

    // X_t and its determinant
    auto build_x = [&](cplx t) {
        CMatrix X(n, n);
        for (int k = 0; k < n; ++k) {
            cplx c = 1.0 / T(t);
            for (int l = 0; l < n; ++l) {
                c *= T(x[k] - y[l]);
                if (l != k) c /= T(x[k] - x[l]);
            }
            c *= T(x[k]) / T(x[k] - t);
            for (int j = 0; j < n; ++j) X(j, k) = c * T(y[j] - x[k] + t) / T(y[j] - x[k]);
        }
        return X;
    };
    const CMatrix X1 = build_x(t1);
    cplx closed = sgn * T(g + t1) / T(t1);
    for (int l = 0; l < n; ++l) closed *= T(x[l]) / T(x[l] - t1);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) closed *= T(y[j] - y[k]) / T(x[j] - x[k]);
    const cplx dx = log_determinant(X1).value();
    out.det_x = std::abs(dx - closed) / std::abs(closed);

    // t-independence of det[X_t (H~ - 2Q~)]/det X_t
    const CMatrix X2 = build_x(t2);
    const cplx r1 = log_determinant(X1 * (Ht - 2.0 * Qt)).value() / dx;
    const cplx r2 = log_determinant(X2 * (Ht - 2.0 * Qt)).value() / log_determinant(X2).value();
    out.t_indep = std::abs(r1 - r2) / std::abs(r1);

    // residue identity
    const cplx t = t1;
    double worst = 0.0;
    for (int eps = -1; eps <= 1; ++eps) {
        const cplx ee = static_cast<double>(eps) * e;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                cplx l{0.0, 0.0};
                for (int b = 0; b < n; ++b) {
                    cplx c{1.0, 0.0};
                    for (int q = 0; q < n; ++q) {
                        c *= T(x[b] - y[q]);
                        if (q != b) c /= T(x[b] - x[q]);
                    }
                    l += c * T(y[j] - x[b] + t) / T(y[j] - x[b]) * T(x[b]) / T(x[b] - t) * T(x[b] - y[k] + g + ee) /
                         T(x[b] - y[k] + ee);
                }
                cplx pr{1.0, 0.0};
                for (int q = 0; q < n; ++q) pr *= T(t - y[q]) / T(t - x[q]);
                cplx r = -T(t) * T(t - y[k] + g + ee) / T(t - y[k] + ee) * pr * T(y[j]) / T(y[j] - t);
                if (eps != 0) {
                    cplx c{1.0, 0.0};
                    for (int q = 0; q < n; ++q) c *= T(y[k] - y[q] - ee) / T(y[k] - x[q] - ee);
                    r -= tg * c * T(y[j] - y[k] + t + ee) / T(y[j] - y[k] + ee) * T(y[k] - ee) / T(y[k] - t - ee);
                }
                if (eps == 0 && j == k) {
                    cplx c{1.0, 0.0};
                    for (int q = 0; q < n; ++q) {
                        if (q != j) c *= T(y[j] - y[q]);
                        c /= T(y[j] - x[q]);
                    }
                    r += tg * T(t) * c * T(y[j]) / T(y[j] - t);
                }
                worst = std::max(worst, std::abs(l - r) / std::max({1.0, std::abs(l), std::abs(r)}));
            }
    }
    out.residue = worst;
    return out;
}

namespace {

std::uint64_t trial_seed(std::uint64_t seed, int trial) { return seed * 1000003ULL + static_cast<std::uint64_t>(trial); }

cplx sample(std::mt19937_64& rng, double re, double im) {
    std::uniform_real_distribution<double> a(-re, re), b(-im, im);
    return {a(rng), b(rng)};
}

} // namespace

std::vector<IdentityReport> run_summation_suite(const RandomTestConfig& cfg) {
    if (cfg.trials < 1) throw ValidationError("trials must be >= 1");
    std::vector<IdentityReport> out;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t sd = trial_seed(cfg.seed, trial);
        std::mt19937_64 rng(sd);
        std::uniform_int_distribution<int> nd(cfg.n_min, cfg.n_max), kd(-3, 3);
        std::uniform_real_distribution<double> tre(-0.5, 0.5), tim(0.5, 2.0);
        const int n = nd(rng);
        const int k = kd(rng);
        const cplx tau{tre(rng), tim(rng)};
        const Theta a(tau);
        cplx x, y;
        for (;;) { // keep away from theta zeros
            x = sample(rng, cfg.re_box, cfg.im_box);
            y = sample(rng, cfg.re_box, cfg.im_box);
            bool ok = std::abs(a.th1(x)) > 1e-3 && std::abs(Theta(tau / static_cast<double>(n)).th1(y)) > 1e-3;
            for (int l = 0; l < n && ok; ++l) {
                ok = std::abs(a.th1(y + static_cast<double>(l) / n)) > 1e-3 &&
                     std::abs(a.th1(y + static_cast<double>(l) / n * tau)) > 1e-3;
            }
            const Theta b(static_cast<double>(n) * tau);
            ok = ok && std::abs(b.th1(x + static_cast<double>(k) * tau)) > 1e-3 &&
                 std::abs(b.th1(static_cast<double>(n) * y)) > 1e-3 &&
                 std::abs(Theta(tau / static_cast<double>(n)).th1(x / static_cast<double>(n))) > 1e-3;
            if (ok) break;
        }
        out.push_back({"id-sum1", n, check_sum_identity_1(n, k, x, y, tau), sd});
        out.push_back({"id-sum2", n, check_sum_identity_2(n, x, y, tau), sd});
        out.push_back({"id-sum2-jacobi", n, check_sum_identity_2_via_1(n, x, y, tau), sd});
    }
    return out;
}

std::vector<IdentityReport> run_determinant_suite(const RandomTestConfig& cfg, const ModelParams& p) {
    if (cfg.trials < 1) throw ValidationError("trials must be >= 1");
    std::vector<IdentityReport> out;
    const Theta& th = p.tht;
    const cplx e = p.eta_t;
    const cplx tt = p.tau_t;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t sd = trial_seed(cfg.seed, trial);
        std::mt19937_64 rng(sd);
        const int n = cfg.n_min + trial % (cfg.n_max - cfg.n_min + 1);
        std::vector<cplx> x(n), y(n);
        cplx t1, t2;
        auto far = [&](cplx z) { return std::abs(th.th1(z)) > 1e-3; };
        for (;;) {
            for (int j = 0; j < n; ++j) {
                x[j] = sample(rng, 0.5, 0.1 * tt.imag());
                y[j] = sample(rng, 0.5, 0.1 * tt.imag());
            }
            std::uniform_real_distribution<double> u01(0.0, 1.0);
            t1 = u01(rng) + u01(rng) * tt;
            t2 = u01(rng) + u01(rng) * tt;
            cplx g{0.0, 0.0};
            for (int j = 0; j < n; ++j) g += y[j] - x[j];
            bool ok = far(g) && far(t1) && far(t2) && far(g + t1);
            for (int j = 0; j < n && ok; ++j) {
                ok = far(x[j]) && far(y[j]) && far(x[j] - t1) && far(x[j] - t2) && far(y[j] - t1) &&
                     far(x[j] + e / 2.0) && far(x[j] - e / 2.0) && far(y[j] + e / 2.0) && far(y[j] - e / 2.0) &&
                     far(y[j] - e - t1) && far(y[j] + e - t1) && far(t1 - y[j] + e) && far(t1 - y[j] - e) &&
                     far(t1 - x[j]) && far(t1 - y[j]);
                for (int k = 0; k < n && ok; ++k) {
                    ok = far(x[j] - y[k]) && far(x[j] - y[k] + e) && far(x[j] - y[k] - e) && far(y[j] - y[k] + e) &&
                         far(y[j] - y[k] - e);
                    if (k != j) ok = ok && far(x[j] - x[k]) && far(y[j] - y[k]);
                }
            }
            if (ok) break;
        }
        std::array<cplx, 4> al;
        std::array<cplx, 2> be;
        for (auto& a : al) a = sample(rng, 1.0, 1.0);
        for (auto& b : be) b = sample(rng, 1.0, 1.0);
        const DetIdentityGaps g = check_det_identity(n, al, be, x, y, t1, t2, p);
        out.push_back({"id-det", n, g.det, sd});
        out.push_back({"det-X", n, g.det_x, sd});
        out.push_back({"id-g", n, g.residue, sd});
        out.push_back({"X_t-independence", n, g.t_indep, sd});
    }
    return out;
}

} // namespace csos
