#include "mindiag/construction.hpp"

#include <cmath>
#include <string>

#include "mindiag/detail/dense.hpp"
#include "mindiag/operator_core.hpp"
#include "mindiag/spectral.hpp"

namespace mindiag::construction {

Caso3Report verify_caso3(const SymMatrix& T, int i0) {
    const int n = T.size();
    if (i0 < 0 || i0 >= n) throw ParameterError("verify_caso3: i0 out of range");

    Caso3Report rep;
    rep.i0 = i0;
    rep.minimal_diag = operator_core::diag_map(T);

    const double scale = std::max(T.max_abs(), 1e-300);
    const double zero_tol = 1e-13 * scale;

    bool diag_zero = std::abs(T(i0, i0)) <= zero_tol;
    bool row_nonzero = true;
    for (int k = 0; k < n; ++k) {
        if (k == i0) continue;
        if (std::abs(T(i0, k)) <= zero_tol) { row_nonzero = false; break; }
    }
    rep.hyp2_nonzero_row = diag_zero && row_nonzero;

    const auto c = operator_core::column(T, i0);
    rep.column_norm = detail::norm2(c);
    const double t1_norm = spectral::op_norm(operator_core::zero_row_col(T, i0));
    rep.dominance_margin = rep.column_norm - t1_norm;
    rep.hyp3_dominance = rep.dominance_margin >= -1e-10 * std::max(1.0, rep.column_norm);

    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k == i0) continue;
        const auto ck = operator_core::column(T, k);
        worst = std::max(worst, std::abs(detail::dot(c, ck)));
    }
    rep.hyp4_orthogonality = worst;
    rep.hyp4_ok = worst <= 1e-10 * std::max(1.0, rep.column_norm * rep.column_norm);

    rep.op_norm = spectral::op_norm(T);
    rep.norm_identity_residual = std::abs(rep.op_norm - rep.column_norm);
    return rep;
}

DiagVector solve_orthogonal_diagonal(const SymMatrix& T_off, int i0) {
    const int n = T_off.size();
    if (i0 < 0 || i0 >= n) throw ParameterError("solve_orthogonal_diagonal: i0 out of range");
    const double scale = std::max(T_off.max_abs(), 1e-300);
    for (int i = 0; i < n; ++i)
        if (std::abs(T_off(i, i)) > 1e-13 * scale)
            throw ParameterError("solve_orthogonal_diagonal: matrix must have zero diagonal");

    std::vector<double> d(n, 0.0);
    for (int k = 0; k < n; ++k) {
        if (k == i0) continue;
        const double pivot = T_off(i0, k);
        if (pivot == 0.0)
            throw ParameterError("solve_orthogonal_diagonal: zero entry in row i0 at column " + std::to_string(k));
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i0 || j == k) continue;
            s += T_off(i0, j) * T_off(j, k);
        }
        d[k] = -s / pivot;
    }
    return DiagVector(std::move(d));
}

int candidate_i0(const SymMatrix& T) {
    const int n = T.size();
    const double scale = std::max(T.max_abs(), 1e-300);
    int best = -1;
    double best_norm = -1.0;
    for (int i = 0; i < n; ++i) {
        if (std::abs(T(i, i)) > 1e-13 * scale) continue;
        bool ok = true;
        double norm2 = 0.0;
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            if (std::abs(T(i, k)) <= 1e-13 * scale) { ok = false; break; }
            norm2 += T(i, k) * T(i, k);
        }
        if (ok && norm2 > best_norm) {
            best_norm = norm2;
            best = i;
        }
    }
    return best;
}

}  // namespace mindiag::construction
