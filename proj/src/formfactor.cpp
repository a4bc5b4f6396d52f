#include "csos/formfactor.hpp"

#include <cmath>
#include <numeric>

#include "csos/density.hpp"

namespace csos {

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

LogDet from_log(cplx w) { return {std::exp(I * w.imag()), w.real()}; }

void check_site(int m, const ModelParams& p) {
    if (m < 1 || m > p.N) throw ValidationError("site index must lie in 1..N");
}

void check_pair(const BetheState& a, const BetheState& b, const ModelParams& p) {
    if (a.N != p.N || b.N != p.N) throw ValidationError("states solved for a different lattice size");
}

// (omega_y/omega_x) e^{2 pi i eta gt}, written with explicit exponents.
cplx twist_exponent(const BetheState& x, const BetheState& y, double gt, const ModelParams& p) {
    return I * pi * (y.beta - x.beta) + 2.0 * pi * I * p.eta * gt;
}

// det[H~ - 2 Q~] for the pair.
LogDet numerator_det(const std::vector<double>& x, const std::vector<double>& y, double gt, cplx E,
                     const ModelParams& p) {
    const Theta& t = p.tht;
    const cplx e = p.eta_t;
    const int n = static_cast<int>(x.size());
    const cplx tg = t.th1(gt);
    std::vector<cplx> pp(n), pm(n);
    for (int k = 0; k < n; ++k) {
        cplx lp{0.0, 0.0}, lm{0.0, 0.0};
        for (int l = 0; l < n; ++l) {
            lp += t.log_th1(x[l] - y[k] + e) - t.log_th1(y[l] - y[k] + e);
            lm += t.log_th1(x[l] - y[k] - e) - t.log_th1(y[l] - y[k] - e);
        }
        pp[k] = std::exp(lp);
        pm[k] = std::exp(lm);
    }
    cplx lq{0.0, 0.0};
    for (int l = 0; l < n; ++l) lq += t.log_th1(x[l] + e / 2.0) - t.log_th1(y[l] + e / 2.0);
    const cplx qprod = std::exp(lq);

    CMatrix M(n, n);
    for (int j = 0; j < n; ++j) {
        const cplx qj = (t.th1(x[j] - e / 2.0 + gt) / t.th1(x[j] - e / 2.0) -
                         E * t.th1(x[j] + e / 2.0 + gt) / t.th1(x[j] + e / 2.0)) /
                        tg * qprod;
        for (int k = 0; k < n; ++k) {
            const double d = x[j] - y[k];
            const cplx base = t.th1(d + gt) / t.th1(d);
            const cplx h1 = (base - E * t.th1(d + gt + e) / t.th1(d + e)) / tg * pp[k];
            const cplx h2 = (base - t.th1(d + gt - e) / (E * t.th1(d - e))) / tg * E * E * pm[k];
            M(j, k) = h1 - h2 - 2.0 * qj;
        }
    }
    return log_determinant(M);
}

} // namespace

double gamma_tilde(const BetheState& bra, const BetheState& ket) { return sum(ket.roots) - sum(bra.roots); }

CMatrix gaudin_matrix(const std::vector<double>& z, const ModelParams& p) {
    const int n = static_cast<int>(z.size());
    const cplx e = p.eta_t;
    const double N = p.N;
    CMatrix M(n, n);
    for (int j = 0; j < n; ++j) {
        double ksum = 0.0;
        for (int l = 0; l < n; ++l) ksum += kernel_K(z[j] - z[l], p);
        for (int k = 0; k < n; ++k) {
            M(j, k) = -2.0 * pi * I * e * kernel_K(z[j] - z[k], p) + 4.0 * pi * I * e * p.eta;
        }
        M(j, j) += -2.0 * pi * I * e * N * (bare_momentum_deriv(z[j], p) / (2.0 * pi) - ksum / N);
    }
    return M;
}

LogDet norm_determinant(const BetheState& s, const ModelParams& p) {
    const Theta& t = p.tht;
    const cplx e = p.eta_t;
    const auto& x = s.roots;
    const int n = static_cast<int>(x.size());
    cplx w = I * pi * p.eta * e * static_cast<double>(n * n);
    for (double xt : x) w += I * static_cast<double>(p.N) * (bare_momentum(xt, p) - 2.0 * pi * p.eta * xt);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            w += t.log_th1(x[j] - x[k] + e);
            if (j != k) w -= t.log_th1(x[j] - x[k]);
        }
    w -= static_cast<double>(n) * std::log(-e * t.d1_zero());
    w += log_determinant(gaudin_matrix(x, p)).log();
    return from_log(w);
}

cplx log_norm_ratio(const BetheState& bra, const BetheState& ket, const ModelParams& p) {
    check_pair(bra, ket, p);
    const Theta& t = p.tht;
    const cplx e = p.eta_t;
    const auto& x = bra.roots;
    const auto& y = ket.roots;
    const int n = static_cast<int>(x.size());
    const double N = p.N;
    cplx w{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
        w += I * N * (bare_momentum(y[k], p) - 2.0 * pi * p.eta * y[k]);
        w -= I * N * (bare_momentum(x[k], p) - 2.0 * pi * p.eta * x[k]);
    }
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            w += t.log_th1(y[j] - y[k] + e) - t.log_th1(x[j] - x[k] + e);
            if (j != k) w += t.log_th1(x[j] - x[k]) - t.log_th1(y[j] - y[k]);
        }
    w += log_determinant(gaudin_matrix(y, p)).log() - log_determinant(gaudin_matrix(x, p)).log();
    return w;
}

double ratio2_gap(const BetheState& bra, const BetheState& ket, const ModelParams& p) {
    const cplx w = log_norm_ratio(bra, ket, p) - 2.0 * pi * I * static_cast<double>(p.n) * (ket.beta - bra.beta);
    return std::abs(std::exp(w) - 1.0);
}

FormFactorResult szm_between(const BetheState& bra, const BetheState& ket, int m, const ModelParams& p) {
    check_pair(bra, ket, p);
    check_site(m, p);
    const auto& x = bra.roots;
    const auto& y = ket.roots;
    const int n = static_cast<int>(x.size());
    const double gt = gamma_tilde(bra, ket);
    if (std::abs(gt - std::round(gt)) < 1e-9)
        throw WrongEntryPoint("gamma_tilde is an integer: use mean_szm or opposite_omega_ff");
    const Theta& t = p.tht;
    const cplx e = p.eta_t;
    const cplx lE = twist_exponent(bra, ket, gt, p);
    const cplx E = std::exp(lE);
    const double db = ket.beta - bra.beta;

    // staggering prefactor
    double dp0 = 0.0;
    for (int l = 0; l < n; ++l) dp0 += bare_momentum(x[l], p) - bare_momentum(y[l], p);
    const cplx lstag = -I * pi * db - 2.0 * pi * I * p.eta * gt - I * dp0;
    const cplx stag = std::exp(static_cast<double>(m - 1) * lstag);

    // dynamical sum over the height orbit
    cplx S{0.0, 0.0};
    for (int a = 0; a < p.L; ++a) {
        const cplx s = p.s0 + static_cast<double>(a);
        S += std::exp(lE * s) * t.th1(e * s + gt) / t.th1(e * s);
    }
    S /= static_cast<double>(p.L);

    cplx lpref = static_cast<double>(n) * (std::log(-e * t.d1_zero()) - 2.0 * pi * I * p.eta * gt - 2.0 * pi * I * db);
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) lpref += t.log_th1(y[k] - y[l]) - t.log_th1(x[k] - x[l]);

    const LogDet num = numerator_det(x, y, gt, E, p);
    const LogDet den = log_determinant(gaudin_matrix(y, p));
    const cplx ldet = num.log() - den.log();

    // branch of the square root: anchored on ((-1)^k omega_y/omega_x)^n
    const int k = ket.label.k - bra.label.k;
    const cplx lR = I * pi * static_cast<double>(n) * (db + static_cast<double>(k));
    const cplx l2 = log_norm_ratio(bra, ket, p);
    const cplx lsqrt = lR + 0.5 * wrap_log(l2 - 2.0 * lR);

    FormFactorResult r;
    r.site = m;
    r.gamma_tilde = gt;
    r.parts["staggering"] = stag;
    r.parts["s_sum"] = S;
    r.parts["prefactor"] = std::exp(lpref);
    r.parts["det_ratio"] = std::exp(ldet);
    r.parts["norm_ratio_sqrt"] = std::exp(lsqrt);
    r.value = stag * S * std::exp(lpref + ldet + lsqrt);
    return r;
}

cplx mean_szm(const BetheState& state, int m, const ModelParams& p) {
    check_site(m, p);
    const auto& x = state.roots;
    const int n = static_cast<int>(x.size());
    const CMatrix Phi = gaudin_matrix(x, p);
    CMatrix M = Phi;
    for (int j = 0; j < n; ++j) {
        const cplx q = p.eta_t * (I * bare_momentum_deriv(x[j], p) - 2.0 * pi * I * p.eta);
        for (int k = 0; k < n; ++k) M(j, k) += 2.0 * q;
    }
    return determinant_ratio(M, Phi);
}

cplx opposite_omega_ff(const BetheState& state, int m, const ModelParams& p) {
    if (p.L % 2 != 0) throw ValidationError("opposite-twist form factor needs L even");
    check_site(m, p);
    const auto& x = state.roots;
    const int n = static_cast<int>(x.size());
    const cplx e = p.eta_t;
    const CMatrix Phi = gaudin_matrix(x, p);
    // Phi^(-): same diagonal, off-diagonal term with the opposite sign
    CMatrix Pm = Phi;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const cplx off = -4.0 * pi * I * p.eta * e + 2.0 * pi * I * e * kernel_K(x[j] - x[k], p);
            Pm(j, k) += 2.0 * off;
        }
    const cplx lden = log_determinant(Phi).log();
    cplx S{0.0, 0.0};
    for (int a = 0; a < p.L; ++a) {
        const cplx s = p.s0 + static_cast<double>(a);
        const cplx q = 2.0 * bracket_logderiv(s, p);
        CMatrix M = Pm;
        M.array() += 2.0 * q;
        S += std::exp(-I * pi * s) * std::exp(log_determinant(M).log() - lden);
    }
    const double sgn = ((m - 1) % 2 == 0) ? 1.0 : -1.0;
    return sgn * S / static_cast<double>(p.L);
}

cplx gaudin_direct(const std::vector<cplx>& u, const ModelParams& p) {
    const int n = static_cast<int>(u.size());
    const double N = p.N;
    auto lg = [&](cplx w) { return bracket_logderiv(w, p); };
    CMatrix Phi(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) Phi(j, k) = -(lg(u[j] - u[k] - 1.0) - lg(u[j] - u[k] + 1.0));
    for (int j = 0; j < n; ++j) {
        cplx d = -N * (lg(u[j] - 0.5) - lg(u[j] + 0.5));
        for (int t = 0; t < n; ++t) d += lg(u[j] - u[t] - 1.0) - lg(u[j] - u[t] + 1.0);
        Phi(j, j) += d;
    }
    cplx w{0.0, 0.0};
    for (int t = 0; t < n; ++t) w += std::log(fn_d(u[t], p));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            w += std::log(bracket(u[j] - u[k] + 1.0, p));
            if (j != k) w -= std::log(bracket(u[j] - u[k], p));
        }
    w -= static_cast<double>(n) * std::log(-bracket_deriv(0.0, p));
    return std::exp(w + log_determinant(Phi).log());
}

cplx raw_ff_sigmaz(const std::vector<cplx>& u, double bu, const std::vector<cplx>& v, double bv, int m,
                   const ModelParams& p) {
    check_site(m, p);
    const int n = static_cast<int>(u.size());
    const cplx xi = 0.5;
    auto br = [&](cplx w) { return bracket(w, p); };
    cplx g{0.0, 0.0};
    for (int j = 0; j < n; ++j) g += v[j] - u[j];

    cplx pre{1.0, 0.0};
    for (int k = 1; k < m; ++k) pre *= eigenvalue_tau(xi, u, bu, p) / eigenvalue_tau(xi, v, bv, p);

    cplx S{0.0, 0.0};
    for (int a = 0; a < p.L; ++a) {
        const cplx s = p.s0 + static_cast<double>(a);
        S += std::exp(I * pi * (bv - bu) * s) * br(g + s) / br(s);
    }
    S /= static_cast<double>(p.L);

    const cplx rv_u = std::exp(I * pi * (bv - bu)); // omega_v/omega_u
    const cplx ou2 = std::exp(-2.0 * pi * I * bu);  // omega_u^{-2}
    const cplx bg = br(g);
    CMatrix Om(n, n), P(n, n);
    for (int k = 0; k < n; ++k) {
        cplx pa{1.0, 0.0}, pd{1.0, 0.0}, pp{1.0, 0.0};
        for (int t = 0; t < n; ++t) {
            pa *= br(u[t] - v[k] + 1.0);
            pd *= br(u[t] - v[k] - 1.0);
            pp *= br(v[t] - v[k] + 1.0) * br(u[t] - xi + 1.0) / br(v[t] - xi + 1.0);
        }
        const cplx dk = fn_d(v[k], p);
        for (int j = 0; j < n; ++j) {
            const cplx d = u[j] - v[k];
            Om(j, k) = (br(d + g) / br(d) - rv_u * br(d + g + 1.0) / br(d + 1.0)) * pa / bg +
                       (br(d + g) / br(d) - br(d + g - 1.0) / (rv_u * br(d - 1.0))) * ou2 * dk * pd / bg;
            const cplx y = u[j] - xi;
            P(j, k) = (br(y + g) / br(y) - rv_u * br(y + g + 1.0) / br(y + 1.0)) / bg * pp;
        }
    }
    cplx pr{1.0, 0.0};
    for (int t = 0; t < n; ++t) pr *= fn_d(u[t], p);
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) pr /= br(u[k] - u[l]) * br(v[l] - v[k]);
    return pre * S * pr * log_determinant(Om - 2.0 * P).value();
}

cplx raw_ff_sigmaz(const BetheState& bra, const BetheState& ket, int m, const ModelParams& p) {
    if (p.N > 8) throw ValidationError("raw_ff_sigmaz is restricted to N <= 8");
    return raw_ff_sigmaz(spectral_roots(bra.roots, p), bra.beta, spectral_roots(ket.roots, p), ket.beta, m, p);
}

double id_detbis_gap(const BetheState& bra, const BetheState& ket, const ModelParams& p) {
    const auto& x = bra.roots;
    const auto& y = ket.roots;
    const int n = static_cast<int>(x.size());
    const double gt = gamma_tilde(bra, ket);
    const Theta& t = p.tht;
    const cplx e = p.eta_t;
    const cplx E = std::exp(twist_exponent(bra, ket, gt, p));

    cplx lprod{0.0, 0.0};
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) lprod += t.log_th1(y[j] - y[k]) - t.log_th1(x[j] - x[k]);
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    const cplx lhs = sgn * std::exp(lprod + numerator_det(x, y, gt, E, p).log());

    CMatrix H(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            H(j, k) = E / t.d1_zero() * (t.ld(y[j] - y[k] + e) - t.ld(y[j] - y[k] - e));
    for (int j = 0; j < n; ++j) {
        cplx ld{0.0, 0.0}, lp{0.0, 0.0}, lm{0.0, 0.0};
        for (int l = 0; l < n; ++l) {
            if (l != j) ld += t.log_th1(y[j] - y[l]);
            ld -= t.log_th1(y[j] - x[l]);
            lp += t.log_th1(x[l] - y[j] + e) - t.log_th1(y[l] - y[j] + e);
            lm += t.log_th1(x[l] - y[j] - e) - t.log_th1(y[l] - y[j] - e);
        }
        H(j, j) += std::exp(ld) * (std::exp(lp) - E * E * std::exp(lm));
    }
    cplx lq{0.0, 0.0};
    for (int l = 0; l < n; ++l)
        lq += t.log_th1(x[l] + e / 2.0) + t.log_th1(y[l] - e / 2.0) - t.log_th1(y[l] + e / 2.0) -
              t.log_th1(x[l] - e / 2.0);
    const cplx q = E - std::exp(lq);
    CMatrix Hm = H, Hp = H;
    Hm.array() -= q;
    Hp.array() += q;
    const cplx rhs = (log_determinant(Hm).value() - log_determinant(Hp).value()) / t.th1(gt);
    return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

cplx phi_pm(double yv, int sign, const BetheState& bra, const BetheState& ket, const ModelParams& p) {
    const Theta& t = p.tht;
    const cplx e = static_cast<double>(sign) * p.eta_t;
    cplx w{0.0, 0.0};
    for (std::size_t l = 0; l < bra.roots.size(); ++l)
        w += t.log_th1(bra.roots[l] - yv + e) - t.log_th1(ket.roots[l] - yv + e);
    return std::exp(w);
}

cplx phi_j(int j, const BetheState& bra, const BetheState& ket, const ModelParams& p) {
    const Theta& t = p.tht;
    const auto& x = bra.roots;
    const auto& y = ket.roots;
    cplx w{0.0, 0.0};
    for (std::size_t l = 0; l < x.size(); ++l) {
        w += t.log_th1(y[j] - x[l]);
        if (static_cast<int>(l) != j) w -= t.log_th1(y[j] - y[l]);
    }
    return static_cast<double>(p.N) * std::exp(w);
}

cplx fredholm_norm_ratio(const BetheState& s, const ModelParams& p) {
    const int n = static_cast<int>(s.roots.size());
    cplx w = log_determinant(gaudin_matrix(s.roots, p)).log();
    w -= static_cast<double>(n) * std::log(-2.0 * pi * I * p.eta_t * static_cast<double>(p.N));
    for (double y : s.roots) w -= std::log(rho_eval(y, p));
    return std::exp(w);
}

} // namespace csos
