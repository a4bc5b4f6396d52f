#include "csos/linalg.hpp"

#include <cmath>

namespace csos {

LogDet log_determinant(const CMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
    LogDet out;
    if (m.rows() == 0) return out;
    Eigen::PartialPivLU<CMatrix> lu(m);
    const CMatrix& f = lu.matrixLU();
    out.phase = lu.permutationP().determinant();
    for (Eigen::Index i = 0; i < f.rows(); ++i) {
        const cplx d = f(i, i);
        const double a = std::abs(d);
        if (a == 0.0 || !std::isfinite(a)) throw DegenerateError("singular matrix in determinant");
        out.phase *= d / a;
        out.logabs += std::log(a);
    }
    return out;
}

cplx wrap_log(cplx w) {
    double im = std::remainder(w.imag(), 2.0 * pi);
    if (im <= -pi) im += 2.0 * pi;
    return {w.real(), im};
}

cplx determinant_ratio(const CMatrix& num, const CMatrix& den) {
    if (num.rows() != den.rows() || num.cols() != den.cols()) throw ValidationError("shape mismatch");
    if (num.rows() == 0) return 1.0;
    log_determinant(den); // throws on a singular denominator
    const CMatrix m = Eigen::PartialPivLU<CMatrix>(den).solve(num);
    return Eigen::PartialPivLU<CMatrix>(m).determinant();
}

} // namespace csos
