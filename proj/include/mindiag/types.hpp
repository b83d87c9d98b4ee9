// Core value types and error taxonomy shared by all mindiag modules.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mindiag {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SizeError : ParameterError {
    using ParameterError::ParameterError;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSpectrumError : NumericalError {
    using NumericalError::NumericalError;
};

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense real symmetric n x n matrix, row-major. Entries are validated to be
/// finite and exactly symmetric at construction; values are immutable after
/// that, so sharing across threads is safe.
class SymMatrix {
  public:
    SymMatrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
        if (n <= 0) throw ParameterError("SymMatrix: n must be positive");
        if (a_.size() != static_cast<std::size_t>(n) * n)
            throw ParameterError("SymMatrix: entry count does not match n*n");
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < i; ++j)
                if (a_[idx(i, j)] != a_[idx(j, i)])
                    throw ParameterError("SymMatrix: entries not symmetric");
        for (double v : a_)
            if (!std::isfinite(v)) throw ParameterError("SymMatrix: non-finite entry");
    }

    static SymMatrix zeros(int n) { return SymMatrix(n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)); }

    int size() const { return n_; }
    double operator()(int i, int j) const { return a_[idx(i, j)]; }
    const std::vector<double>& data() const { return a_; }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

  private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    int n_;
    std::vector<double> a_;
};

/// Real n-vector representing the diagonal of a diagonal operator truncation.
struct DiagVector {
    std::vector<double> d;

    DiagVector() = default;
    explicit DiagVector(std::vector<double> values) : d(std::move(values)) {
        if (d.empty()) throw ParameterError("DiagVector: empty");
        for (double v : d)
            if (!std::isfinite(v)) throw ParameterError("DiagVector: non-finite entry");
    }
    static DiagVector zeros(int n) {
        if (n <= 0) throw ParameterError("DiagVector: n must be positive");
        return DiagVector(std::vector<double>(n, 0.0));
    }
    int size() const { return static_cast<int>(d.size()); }
    double operator[](int i) const { return d[i]; }
};

enum class GammaVariant { T, T1, D_seq, Tr, TrPlusD, Q, R, C_a };

/// Parameters of the gamma operator family. `r_override`, when set, pins the
/// first-row scaling factor instead of recomputing it at this truncation,
/// which keeps principal corners of Tr/R consistent across sizes.
struct GammaFamilySpec {
    double gamma = 0.5;
    int n = 1;
    GammaVariant variant = GammaVariant::T;
    std::optional<double> r_override;

    void validate() const {
        if (!std::isfinite(gamma) || gamma == 0.0 || std::abs(gamma) >= 1.0)
            throw ParameterError("GammaFamilySpec: need 0 < |gamma| < 1");
        if (n < 1) throw ParameterError("GammaFamilySpec: n must be >= 1");
        if (variant == GammaVariant::C_a && gamma <= 0.0)
            throw ParameterError("GammaFamilySpec: C_a requires gamma > 0");
    }
};

const char* to_string(GammaVariant v);
std::optional<GammaVariant> variant_from_string(const std::string& s);

enum class SolverStatus { converged, iter_cap, degenerate };

struct SolverOptions {
    double tol = 1e-6;        // relative duality-gap target
    int max_iters = 60;       // endgame/polish iteration cap per candidate
    int multistart = 1;       // extra perturbed starts beyond the two defaults
    double mu_start_rel = 1e-1;   // smoothing schedule, relative to ||C||
    double mu_end_rel = 1e-8;
    double mu_shrink = 3.1622776601683795;  // sqrt(10) per stage
    int inner_iters = 200;    // descent steps per smoothing stage
    std::uint64_t seed = 0;

    void validate() const {
        if (!(tol > 0)) throw ParameterError("SolverOptions: tol must be > 0");
        if (max_iters < 1) throw ParameterError("SolverOptions: max_iters must be >= 1");
        if (multistart < 0) throw ParameterError("SolverOptions: multistart must be >= 0");
    }
};

/// Output of min_diag_norm: best diagonal found, the certified bracket
/// [lower, upper] around the quotient norm, and solver bookkeeping.
struct ApproxResult {
    DiagVector d_star;
    double upper = 0.0;
    double lower = -std::numeric_limits<double>::infinity();
    double gap = std::numeric_limits<double>::infinity();
    long iterations = 0;
    SolverStatus status = SolverStatus::iter_cap;
};

struct MatrixMetadata {
    std::optional<std::string> family;
    std::optional<double> gamma;
    std::optional<std::string> variant;
};

/// On-disk matrix representation. `symmetric` is false only for the
/// lower-triangular C_a factor; symmetric files round-trip through SymMatrix.
struct MatrixFile {
    int n = 0;
    std::vector<double> entries;  // row-major n*n
    bool symmetric = true;
    MatrixMetadata metadata;

    SymMatrix to_sym() const;
    static MatrixFile from_sym(const SymMatrix& m, MatrixMetadata meta = {});
};

}  // namespace mindiag
