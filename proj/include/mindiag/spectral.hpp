// Symmetric eigendecomposition, operator norms, spectral projections onto the
// extreme eigenspaces, and the balanced-spectrum test.
#pragma once

#include <vector>

#include "mindiag/types.hpp"

namespace mindiag::spectral {

struct EigenSystem {
    std::vector<double> eigenvalues;               // ascending
    std::vector<std::vector<double>> eigenvectors; // eigenvectors[k] pairs with eigenvalues[k]
    double residual = 0.0;                         // max_k ||T v_k - lambda_k v_k||
    int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Orthonormal bases of the lambda_max / lambda_min eigenvalue clusters.
struct SpectralProjections {
    std::vector<std::vector<double>> plus_basis;
    std::vector<std::vector<double>> minus_basis;
    double cluster_tol = 0.0;
    int rank_plus() const { return static_cast<int>(plus_basis.size()); }
    int rank_minus() const { return static_cast<int>(minus_basis.size()); }
};

struct BalanceCheck {
    bool balanced = false;
    double residual = 0.0;  // |lambda_max + lambda_min|
};

struct VpmResiduals {
    double plus = 0.0;
    double minus = 0.0;
};

inline constexpr double kDefaultClusterTol = 1e-8;

EigenSystem eig_sym(const SymMatrix& T);
double op_norm(const SymMatrix& T);
double op_norm(const EigenSystem& es);

SpectralProjections spectral_projections(const EigenSystem& es, double cluster_tol = kDefaultClusterTol);

BalanceCheck balanced_spectrum_check(const SymMatrix& T, double tol = 1e-8);

/// Residuals of the closed-form extreme eigenvector candidates
/// v_pm = (||c_i0|| e_i0 +- c_i0) / (sqrt(2) ||c_i0||).
VpmResiduals verify_vpm(const SymMatrix& T, int i0);

}  // namespace mindiag::spectral
