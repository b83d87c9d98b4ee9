// Small dense linear-algebra kernels used internally: a plain row-major
// matrix, cyclic Jacobi eigendecomposition, pivoted LU solves, and a couple
// of vector helpers. Desk-scale only (n up to a few thousand).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace mindiag::detail {

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

struct JacobiResult {
    std::vector<double> eigenvalues;  // ascending
    Matrix vectors;                   // column k pairs with eigenvalues[k]
    int sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix given by its row-major
/// entries. Converges when the off-diagonal Frobenius mass drops below
/// 1e-14 * ||A||_F; throws past the sweep cap. Deterministic.
inline std::optional<JacobiResult> jacobi_eig(int n, std::vector<double> a, int max_sweeps = 100) {
    Matrix V = Matrix::identity(n);
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    double fro2 = 0.0;
    for (double v : a) fro2 += v * v;
    const double fro = std::sqrt(fro2);

    auto off_mass = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    if (fro > 0.0) {
        const double target = 1e-14 * fro;
        for (; sweep < max_sweeps; ++sweep) {
            if (off_mass() <= target) break;
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = at(p, q);
                    if (std::abs(apq) <= 1e-300) continue;
                    const double app = at(p, p), aqq = at(q, q);
                    const double tau = (aqq - app) / (2.0 * apq);
                    const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    for (int k = 0; k < n; ++k) {
                        const double akp = at(k, p), akq = at(k, q);
                        at(k, p) = c * akp - s * akq;
                        at(k, q) = s * akp + c * akq;
                    }
                    for (int k = 0; k < n; ++k) {
                        const double apk = at(p, k), aqk = at(q, k);
                        at(p, k) = c * apk - s * aqk;
                        at(q, k) = s * apk + c * aqk;
                    }
                    for (int k = 0; k < n; ++k) {
                        const double vkp = V(k, p), vkq = V(k, q);
                        V(k, p) = c * vkp - s * vkq;
                        V(k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
        if (off_mass() > 1e-12 * fro) return std::nullopt;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        if (at(i, i) != at(j, j)) return at(i, i) < at(j, j);
        return i < j;
    });

    JacobiResult res;
    res.eigenvalues.resize(n);
    res.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        res.eigenvalues[k] = at(order[k], order[k]);
        for (int i = 0; i < n; ++i) res.vectors(i, k) = V(i, order[k]);
    }
    res.sweeps = sweep;
    return res;
}

/// LU solve with partial pivoting; returns nullopt on (near-)singular pivots.
inline std::optional<std::vector<double>> lu_solve(Matrix A, std::vector<double> b) {
    const int n = A.rows;
    double scale = 0.0;
    for (double v : A.a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return std::nullopt;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(A(k, k));
        for (int i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > best) { best = std::abs(A(i, k)); piv = i; }
        if (best <= 1e-13 * scale) return std::nullopt;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            const double f = A(i, k) / A(k, k);
            if (f == 0.0) continue;
            A(i, k) = 0.0;
            for (int j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
        x[i] = s / A(i, i);
    }
    return x;
}

/// Ridge-regularized least-norm solve of A x = b through the normal
/// equations; fallback when the square system is singular.
inline std::optional<std::vector<double>> ridge_solve(const Matrix& A, const std::vector<double>& b,
                                                      double rel_ridge = 1e-12) {
    const int n = A.rows, m = A.cols;
    Matrix N(m, m);
    double scale = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += A(k, i) * A(k, j);
            N(i, j) = s;
            scale = std::max(scale, std::abs(s));
        }
    if (scale == 0.0) return std::nullopt;
    for (int i = 0; i < m; ++i) N(i, i) += rel_ridge * scale;
    std::vector<double> rhs(m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k) rhs[i] += A(k, i) * b[k];
    return lu_solve(N, rhs);
}

/// Deterministic uniform doubles in [lo, hi) from splitmix64; identical
/// streams on every platform and compiler.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo = 0.0, double hi = 1.0) {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

  private:
    std::uint64_t state_;
};

}  // namespace mindiag::detail
