#include "mindiag/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "mindiag/detail/dense.hpp"

namespace mindiag::spectral {

using detail::Matrix;

EigenSystem eig_sym(const SymMatrix& T) {
    const int n = T.size();
    auto jac = detail::jacobi_eig(n, T.data());
    if (!jac)
        throw NumericalError("eig_sym: Jacobi sweeps did not converge (off-diagonal mass above tolerance after cap)");

    EigenSystem es;
    es.eigenvalues = std::move(jac->eigenvalues);
    es.eigenvectors.resize(n);
    for (int k = 0; k < n; ++k) {
        es.eigenvectors[k].resize(n);
        for (int i = 0; i < n; ++i) es.eigenvectors[k][i] = jac->vectors(i, k);
    }

    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double res2 = 0.0;
        const auto& v = es.eigenvectors[k];
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += T(i, j) * v[j];
            const double r = s - es.eigenvalues[k] * v[i];
            res2 += r * r;
        }
        worst = std::max(worst, std::sqrt(res2));
    }
    es.residual = worst;
    return es;
}

double op_norm(const EigenSystem& es) {
    return std::max(std::abs(es.eigenvalues.front()), std::abs(es.eigenvalues.back()));
}

double op_norm(const SymMatrix& T) { return op_norm(eig_sym(T)); }

SpectralProjections spectral_projections(const EigenSystem& es, double cluster_tol) {
    const int n = es.size();
    const double nrm = op_norm(es);
    if (nrm <= 0.0)
        throw DegenerateSpectrumError("spectral_projections: zero operator has no extreme eigenspaces");

    const double lam_max = es.eigenvalues.back();
    const double lam_min = es.eigenvalues.front();
    const double width = cluster_tol * nrm;

    SpectralProjections proj;
    proj.cluster_tol = cluster_tol;
    for (int k = 0; k < n; ++k) {
        const double lam = es.eigenvalues[k];
        const bool in_plus = lam_max - lam <= width;
        const bool in_minus = lam - lam_min <= width;
        if (in_plus && in_minus)
            throw DegenerateSpectrumError("spectral_projections: extreme clusters overlap at this tolerance");
        if (in_plus) proj.plus_basis.push_back(es.eigenvectors[k]);
        if (in_minus) proj.minus_basis.push_back(es.eigenvectors[k]);
    }
    return proj;
}

BalanceCheck balanced_spectrum_check(const SymMatrix& T, double tol) {
    const EigenSystem es = eig_sym(T);
    BalanceCheck out;
    out.residual = std::abs(es.eigenvalues.front() + es.eigenvalues.back());
    out.balanced = out.residual <= tol * std::max(op_norm(es), 1e-300);
    return out;
}

VpmResiduals verify_vpm(const SymMatrix& T, int i0) {
    const int n = T.size();
    if (i0 < 0 || i0 >= n) throw ParameterError("verify_vpm: i0 out of range");
    if (std::abs(T(i0, i0)) > 1e-13 * std::max(1.0, T.max_abs()))
        throw ParameterError("verify_vpm: diagonal entry at i0 must be zero");

    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) c[i] = T(i, i0);
    const double cn = detail::norm2(c);
    if (cn <= 0.0) throw DegenerateSpectrumError("verify_vpm: column i0 is zero");

    auto residual = [&](double sign) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = sign * c[i];
        v[i0] += cn;
        const double scale = std::sqrt(2.0) * cn;
        for (double& x : v) x /= scale;
        double res2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += T(i, j) * v[j];
            const double r = s - sign * cn * v[i];
            res2 += r * r;
        }
        return std::sqrt(res2);
    };

    VpmResiduals out;
    out.plus = residual(+1.0);
    out.minus = residual(-1.0);
    return out;
}

}  // namespace mindiag::spectral
