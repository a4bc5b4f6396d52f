#include "csos/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>
#include <boost/math/tools/roots.hpp>

#include "csos/density.hpp"

namespace csos {

GroundStateLabel canonical_label(GroundStateLabel l, const ModelParams& p) {
    if (l.ell < 0 || l.ell >= p.L - p.r) throw ValidationError("ell must lie in 0..L-r-1");
    l.k = ((l.k % 2) + 2) % 2;
    return l;
}

double twist_beta(const GroundStateLabel& l, const ModelParams& p) {
    return static_cast<double>(p.r * p.n + 2 * l.ell) / p.L;
}

std::vector<GroundStateLabel> ground_state_labels(const ModelParams& p) {
    std::vector<GroundStateLabel> out;
    for (int k = 0; k <= 1; ++k)
        for (int ell = 0; ell < p.L - p.r; ++ell) out.push_back({k, ell});
    return out;
}

namespace {

// 2 pi z + periodic Fourier part; only used to pick the branch.
double fourier_momentum(double z, const ModelParams& p) {
    const int M = fourier_cutoff(p);
    double s = 2.0 * pi * z;
    for (int m = 1; m <= M; ++m)
        s += 2.0 * (fourier_coeffs(m, p).p_m.real() / (2.0 * pi * m)) * std::sin(2.0 * pi * m * z);
    return s;
}

double fourier_phase(double z, const ModelParams& p) {
    const int M = fourier_cutoff(p);
    double s = 2.0 * pi * z;
    for (int m = 1; m <= M; ++m) s += 2.0 * (fourier_coeffs(m, p).k_m.real() / m) * std::sin(2.0 * pi * m * z);
    return s;
}

double unwrap(double principal, double approx) {
    return principal + 2.0 * pi * std::round((approx - principal) / (2.0 * pi));
}

} // namespace

double bare_momentum(double z, const ModelParams& p) {
    const cplx h = p.eta_t / 2.0;
    const double principal = (I * (p.tht.log_th1(h + z) - p.tht.log_th1(h - z))).real();
    return unwrap(std::remainder(principal, 2.0 * pi), fourier_momentum(z, p));
}

double bare_phase(double z, const ModelParams& p) {
    const cplx h = p.eta_t;
    const double principal = (I * (p.tht.log_th1(h + z) - p.tht.log_th1(h - z))).real();
    return unwrap(std::remainder(principal, 2.0 * pi), fourier_phase(z, p));
}

double bare_momentum_deriv(double z, const ModelParams& p) {
    const cplx h = p.eta_t / 2.0;
    return (I * (p.tht.ld(z + h) - p.tht.ld(z - h))).real();
}

double bare_phase_deriv(double z, const ModelParams& p) { return 2.0 * pi * kernel_K(z, p); }

double sum_rule_prediction(const GroundStateLabel& l, const ModelParams& p) {
    return static_cast<double>(p.L * l.k + p.r * p.n + 2 * l.ell) / (2.0 * (p.L - p.r));
}

std::vector<double> bethe_residual(const std::vector<double>& roots, const GroundStateLabel& label,
                                   const ModelParams& p) {
    const int n = static_cast<int>(roots.size());
    for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l) {
            const double d = roots[j] - roots[l];
            if (std::abs(d - std::round(d)) < 1e-14) throw DegenerateError("coincident Bethe roots");
        }
    const double beta = twist_beta(label, p);
    const double S = std::accumulate(roots.begin(), roots.end(), 0.0);
    const double N = static_cast<double>(p.N);
    std::vector<double> F(n);
    for (int j = 0; j < n; ++j) {
        double v = N * bare_momentum(roots[j], p);
        for (int l = 0; l < n; ++l)
            if (l != j) v -= bare_phase(roots[j] - roots[l], p);
        const double nj = (j + 1) + label.k;
        v -= 2.0 * pi * (nj - (n + 1) / 2.0 + beta + 2.0 * p.eta * S);
        F[j] = v;
    }
    return F;
}

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

Eigen::MatrixXd bethe_jacobian(const std::vector<double>& z, const ModelParams& p) {
    const int n = static_cast<int>(z.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
            if (l == j) continue;
            const double t = bare_phase_deriv(z[j] - z[l], p);
            J(j, l) += t;
            J(j, j) -= t;
        }
        J(j, j) += p.N * bare_momentum_deriv(z[j], p);
    }
    J.array() -= 4.0 * pi * p.eta;
    return J;
}

double invert_counting(double target, const ModelParams& p) {
    auto f = [&](double z) { return 2.0 * rho_antideriv(z, p) - target; };
    boost::uintmax_t it = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(50);
    auto r = boost::math::tools::toms748_solve(f, target - 2.0, target + 2.0, tol, it);
    return 0.5 * (r.first + r.second);
}

bool increasing(const std::vector<double>& z) {
    for (std::size_t j = 1; j < z.size(); ++j)
        if (!(z[j] > z[j - 1])) return false;
    return true;
}

} // namespace

BetheState solve_ground_state(const GroundStateLabel& label_in, const ModelParams& p, const SolveOptions& opt) {
    const GroundStateLabel label = canonical_label(label_in, p);
    const int n = p.n;
    const double N = p.N;
    const double sx = sum_rule_prediction(label, p);

    std::vector<double> z(n);
    for (int j = 1; j <= n; ++j) z[j - 1] = invert_counting(static_cast<double>(j) / n - (n + 1) / N + 2.0 * sx / N, p);

    std::vector<double> F = bethe_residual(z, label, p);
    double res = max_abs(F);
    int iter = 0;
    for (; iter < opt.max_iter && res >= opt.target; ++iter) {
        const Eigen::MatrixXd J = bethe_jacobian(z, p);
        const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(F.data(), n);
        const Eigen::VectorXd step = J.partialPivLu().solve(rhs);
        double lambda = 1.0;
        bool improved = false;
        for (int h = 0; h < 30; ++h, lambda *= 0.5) {
            std::vector<double> trial(n);
            for (int j = 0; j < n; ++j) trial[j] = z[j] - lambda * step(j);
            if (!increasing(trial)) continue;
            std::vector<double> Ft;
            try {
                Ft = bethe_residual(trial, label, p);
            } catch (const DegenerateError&) {
                continue;
            }
            const double rt = max_abs(Ft);
            if (rt < res) {
                z = std::move(trial);
                F = std::move(Ft);
                res = rt;
                improved = true;
                break;
            }
        }
        if (!improved) break; // roundoff floor
    }
    if (!increasing(z)) throw DegenerateError("Bethe roots collided during Newton iteration");
    if (res >= opt.accept) throw ConvergenceError("Newton iteration did not converge", res);

    BetheState st;
    st.label = label;
    st.roots = std::move(z);
    st.beta = twist_beta(label, p);
    st.residual = res;
    st.N = p.N;
    st.iterations = iter;
    return st;
}

std::vector<double> predicted_root_shift(const BetheState& x, const BetheState& y, const ModelParams& p) {
    const double total = static_cast<double>(p.L * (x.label.k - y.label.k) + 2 * (x.label.ell - y.label.ell)) /
                         (2.0 * (p.L - p.r));
    const double rhs = total / p.N;
    std::vector<double> out;
    out.reserve(y.roots.size());
    for (double yj : y.roots) {
        // the antiderivative is increasing and gains 1/2 per period, so |d| < 1
        const double a0 = rho_antideriv(yj, p);
        auto g = [&](double d) { return rho_antideriv(yj + d, p) - a0 - rhs; };
        boost::uintmax_t it = 200;
        const auto r = boost::math::tools::toms748_solve(g, -1.0, 1.0, boost::math::tools::eps_tolerance<double>(52), it);
        const double d = 0.5 * (r.first + r.second);
        out.push_back(d);
    }
    return out;
}

double counting_deriv(double z, const BetheState& state, const ModelParams& p) {
    double s = bare_momentum_deriv(z, p) / pi;
    for (double x : state.roots) s -= 2.0 / p.N * kernel_K(z - x, p);
    return s;
}

} // namespace csos
