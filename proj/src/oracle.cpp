#include "csos/oracle.hpp"

namespace csos::oracle {

namespace {

void guard(const ModelParams& p) {
    if (p.N > kMaxSites) throw ValidationError("oracle construction is limited to N <= 6");
}

int spin(int state, int site) { return ((state >> site) & 1) == 0 ? 1 : -1; }

// Dynamical R-matrix in the basis (++, +-, -+, --) of (auxiliary, site); rows are outputs.
Eigen::Matrix4cd r_matrix(cplx u, cplx s, const ModelParams& p) {
    Eigen::Matrix4cd R = Eigen::Matrix4cd::Zero();
    R(0, 0) = 1.0;
    R(3, 3) = 1.0;
    R(1, 1) = weight_b(u, s, p);
    R(1, 2) = weight_c(u, s, p);
    R(2, 1) = weight_c(u, -s, p);
    R(2, 2) = weight_b(u, -s, p);
    return R;
}

} // namespace

MonodromyBlocks monodromy_at(cplx u, cplx s, const ModelParams& p) {
    guard(p);
    const int N = p.N;
    const int D = 1 << N;
    CMatrix T = CMatrix::Identity(2 * D, 2 * D); // index = aux * D + state
    for (int j = 0; j < N; ++j) {
        CMatrix F = CMatrix::Zero(2 * D, 2 * D);
        // Heights depend on the spins of the sites already multiplied in (smaller index).
        std::vector<Eigen::Matrix4cd> cache(1 << j);
        std::vector<bool> have(1 << j, false);
        for (int st = 0; st < D; ++st) {
            const int low = st & ((1 << j) - 1);
            if (!have[low]) {
                int m = 0;
                for (int k = 0; k < j; ++k) m += spin(st, k);
                cache[low] = r_matrix(u - 0.5, s + static_cast<double>(m), p);
                have[low] = true;
            }
            const Eigen::Matrix4cd& R = cache[low];
            const int bj = (st >> j) & 1;
            for (int a = 0; a < 2; ++a) {
                const int col = 2 * a + bj;
                for (int row = 0; row < 4; ++row) {
                    const cplx w = R(row, col);
                    if (w == 0.0) continue;
                    const int a2 = row >> 1;
                    const int b2 = row & 1;
                    const int st2 = (st & ~(1 << j)) | (b2 << j);
                    F(a2 * D + st2, a * D + st) += w;
                }
            }
        }
        T = F * T;
    }
    return {T.block(0, 0, D, D), T.block(0, D, D, D), T.block(D, 0, D, D), T.block(D, D, D, D)};
}

std::vector<MonodromyBlocks> build_monodromy(cplx u, const ModelParams& p) {
    std::vector<MonodromyBlocks> out;
    for (int a = 0; a < p.L; ++a) out.push_back(monodromy_at(u, p.s0 + static_cast<double>(a), p));
    return out;
}

DynamicalVector build_bethe_vector(const std::vector<cplx>& v, double beta, bool dual, const ModelParams& p) {
    guard(p);
    const int D = 1 << p.N;
    const int n = static_cast<int>(v.size());
    DynamicalVector out{{}, p.N, p.L, p.s0};
    const cplx one = bracket(1.0, p);
    for (int a = 0; a < p.L; ++a) {
        const cplx s = p.s0 + static_cast<double>(a);
        Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(D);
        vec(0) = 1.0;
        cplx pref;
        if (!dual) {
            for (int j = n - 1; j >= 0; --j) vec = monodromy_at(v[j], s - static_cast<double>(j), p).B * vec;
            pref = std::exp(I * pi * beta * s);
            for (int j = 1; j <= n; ++j) {
                const cplx den = bracket(s - static_cast<double>(j), p);
                if (std::abs(den) < 1e-300) throw PoleError("gauge s0 hits a zero of [s-j]");
                pref *= one / den;
            }
        } else {
            Eigen::RowVectorXcd row = vec.transpose();
            for (int j = n - 1; j >= 0; --j) row = row * monodromy_at(v[j], s - static_cast<double>(j + 1), p).C;
            vec = row.transpose();
            pref = std::exp(-I * pi * beta * s);
            for (int j = 0; j < n; ++j) pref *= bracket(s + static_cast<double>(j), p) / one;
        }
        out.blocks.push_back(pref * vec);
    }
    return out;
}

DynamicalVector build_bethe_vector(const BetheState& state, bool dual, const ModelParams& p) {
    return build_bethe_vector(spectral_roots(state.roots, p), state.beta, dual, p);
}

DynamicalVector apply_transfer(cplx u, const DynamicalVector& f, const ModelParams& p) {
    guard(p);
    DynamicalVector out{{}, f.N, f.L, f.s0};
    const int L = p.L;
    for (int a = 0; a < L; ++a) {
        const MonodromyBlocks M = monodromy_at(u, p.s0 + static_cast<double>(a), p);
        out.blocks.push_back(M.A * f.blocks[(a + 1) % L] + M.D * f.blocks[(a - 1 + L) % L]);
    }
    return out;
}

cplx pair(const DynamicalVector& bra, const DynamicalVector& ket) {
    if (bra.L != ket.L || bra.N != ket.N || bra.s0 != ket.s0)
        throw ValidationError("pairing of vectors on different height orbits");
    cplx s{0.0, 0.0};
    for (int a = 0; a < bra.L; ++a) s += (bra.blocks[a].transpose() * ket.blocks[a])(0, 0);
    return s / static_cast<double>(bra.L);
}

cplx direct_sigma_z(const DynamicalVector& bra, const DynamicalVector& ket, int m) {
    if (m < 1 || m > ket.N) throw ValidationError("site index out of range");
    DynamicalVector sk = ket;
    const int D = 1 << ket.N;
    for (auto& b : sk.blocks)
        for (int st = 0; st < D; ++st) b(st) *= static_cast<double>(spin(st, m - 1));
    return pair(bra, sk);
}

EigenCheck eigen_check(cplx u, const DynamicalVector& ket, const ModelParams& p) {
    const DynamicalVector t = apply_transfer(u, ket, p);
    cplx num{0.0, 0.0};
    double nrm = 0.0;
    for (int a = 0; a < p.L; ++a) {
        num += ket.blocks[a].dot(t.blocks[a]);
        nrm += ket.blocks[a].squaredNorm();
    }
    const cplx lam = num / nrm;
    double res = 0.0;
    for (int a = 0; a < p.L; ++a) res += (t.blocks[a] - lam * ket.blocks[a]).squaredNorm();
    return {std::sqrt(res / nrm) / std::abs(lam), lam};
}

} // namespace csos::oracle
