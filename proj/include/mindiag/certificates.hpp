// Dual witnesses of minimality: positive/negative parts, the convex-hull
// feasibility test over the extreme eigenspaces, certificate assembly and
// verification, the m/M compression test, and the duality gap.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mindiag/spectral.hpp"
#include "mindiag/types.hpp"

namespace mindiag::certificates {

/// Matching convex combinations of squared-coordinate vectors drawn from the
/// two extreme eigenspaces. The weighted vectors are orthonormal sets inside
/// R(E+) / R(E-); for simple extremes they coincide with the projection
/// bases, for clustered extremes they come from the eigendecomposition of
/// the optimal density matrices.
struct HullWitness {
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<std::vector<double>> plus_vectors;
    std::vector<std::vector<double>> minus_vectors;
    double residual = 0.0;
};

struct HullOutcome {
    bool intersects = false;
    double residual = 0.0;
    std::optional<HullWitness> witness;
};

struct HullOptions {
    double tol = 1e-8;     // declared intersecting iff residual <= tol * (1 + point scale)
    int max_iters = 10000; // projected-gradient cap for the cone-constrained solve
};

/// Zero-diagonal, unit-trace-norm symmetric witness with its evaluation.
struct CertificateX {
    SymMatrix X;
    double trace_norm = 1.0;
    double value = 0.0;          // tr(X (C + Diag(D1))) for the certified pair
    double diag_residual = 0.0;  // max |X_kk|
};

struct CertificateCheck {
    bool verdict = false;
    double diag_residual = 0.0;
    double trace_norm_residual = 0.0;
    double value_residual = 0.0;    // | |tr(X A)| - ||A|| ||X||_1 | / max(1, ||A||)
    double support_residual = 0.0;  // max Frobenius defect of E+X+ = X+, E-X- = X-
};

std::pair<SymMatrix, SymMatrix> positive_negative_parts(const SymMatrix& L);

HullOutcome hull_intersection(const spectral::SpectralProjections& proj, const HullOptions& opts = {});

/// Assemble X = (sum_i alpha_i u_i u_i^T - sum_j beta_j w_j w_j^T)/2 from a
/// feasible witness, remove the residual diagonal exactly, and normalize to
/// unit trace norm. Throws CertificateError for witnesses above tolerance.
CertificateX build_certificate(const HullWitness& witness, const SymMatrix& C, const DiagVector& d1,
                               double witness_tol = 1e-6);

CertificateCheck verify_certificate(const SymMatrix& C, const DiagVector& d1, const CertificateX& cert,
                                    double tol, double cluster_tol = spectral::kDefaultClusterTol);

/// m = min / M = max of <D y, y> over unit y in the plus / minus eigenspace,
/// computed as extreme eigenvalues of the basis compressions.
std::pair<double, double> compute_mM(const DiagVector& D, const spectral::SpectralProjections& proj);

struct Condition3Result {
    bool ok = false;
    bool balanced = false;
    double balance_residual = 0.0;
    double m = 0.0;
    double M = 0.0;
};

Condition3Result condition3_check(const SymMatrix& C, const DiagVector& d1, const DiagVector& d_probe,
                                  double cluster_tol = spectral::kDefaultClusterTol);

/// gap = result.upper - |tr(X C)| evaluated with the exact zero-diagonal
/// projection of X; rejects certificates whose diagonal or trace norm is off.
double duality_gap(const SymMatrix& C, const ApproxResult& result, const CertificateX& cert);

/// Best rigorous lower bound on dist(C, diagonals) obtainable from a
/// certificate assembled at C + Diag(d); -inf when no usable witness exists.
double lower_bound_at(const SymMatrix& C, const DiagVector& d, double cluster_tol, int fista_iters = 2000);

}  // namespace mindiag::certificates
