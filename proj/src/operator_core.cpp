#include "mindiag/operator_core.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"
#include "mindiag/spectral.hpp"

namespace mindiag::operator_core {

using detail::Matrix;
using nlohmann::json;

double gamma_entry(double gamma, int i, int j) {
    if (i == j) return 0.0;
    if (i == 0 || j == 0) return std::pow(gamma, std::abs(i - j));
    return std::pow(gamma, std::max(i, j) - 1);
}

SymMatrix build_gamma_T(const GammaFamilySpec& spec) {
    spec.validate();
    const int n = spec.n;
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = gamma_entry(spec.gamma, i, j);
            a[static_cast<std::size_t>(i) * n + j] = v;
            a[static_cast<std::size_t>(j) * n + i] = v;
        }
    return SymMatrix(n, std::move(a));
}

SymMatrix build_T1(const GammaFamilySpec& spec) { return zero_row_col(build_gamma_T(spec), 0); }

double d_sequence_limit(double gamma) { return 1.0 / (gamma - 1.0); }

double d_sequence_closed_form(double gamma, int k) {
    const double g = gamma;
    const double gn = std::pow(g, k + 1);  // paper index n = k + 1
    return -(g * g - gn) / ((1.0 - g) * g * g) + gn / (-1.0 + g * g);
}

namespace {

// truncation size m making the neglected tail of the orthogonality sum for
// entry k fall below 1e-14
int ortho_buffer_size(double gamma, int k) {
    const double ag = std::abs(gamma);
    const double target = std::log(1e-14 * (1.0 - ag * ag)) / std::log(ag);
    const int m = static_cast<int>(std::ceil(0.5 * (k + 1 + target))) + 2;
    return std::max(m, k + 2);
}

// d_k from <c_0(T), c_k(T + D)> = 0 evaluated entrywise on an m-row truncation
double ortho_entry(double gamma, int k) {
    const int m = ortho_buffer_size(gamma, k);
    double s = 0.0;
    for (int j = 1; j < m; ++j) {
        if (j == k) continue;
        s += gamma_entry(gamma, j, 0) * gamma_entry(gamma, j, k);
    }
    return -s / gamma_entry(gamma, 0, k);
}

}  // namespace

DiagVector build_d_sequence(const GammaFamilySpec& spec) {
    spec.validate();
    std::vector<double> d(spec.n, 0.0);
    for (int k = 1; k < spec.n; ++k)
        d[k] = (k >= 3) ? d_sequence_closed_form(spec.gamma, k) : ortho_entry(spec.gamma, k);
    return DiagVector(std::move(d));
}

RFactorReport compute_r(const GammaFamilySpec& spec) {
    spec.validate();
    if (spec.n < 2) throw ParameterError("compute_r: truncation must have n >= 2");
    const double g = spec.gamma;
    const int n = spec.n;

    GammaFamilySpec base = spec;
    base.variant = GammaVariant::T;
    const SymMatrix t1d = add_diag(build_T1(base), build_d_sequence(base));

    RFactorReport rep;
    rep.t1d_norm = spectral::op_norm(t1d);
    rep.column_norm = std::sqrt(g * g * (1.0 - std::pow(g * g, n - 1)) / (1.0 - g * g));
    rep.r = rep.t1d_norm / rep.column_norm;
    rep.column_tail = std::pow(g * g, n) / (1.0 - g * g);
    rep.hs_tail = gamma_hs_closed_form(g) - gamma_hs_partial_sum(g, n);
    rep.d_tail = std::pow(std::abs(g), n - 1) * std::abs(1.0 + g - g * g) / (1.0 - g * g);
    return rep;
}

namespace {

double r_factor(const GammaFamilySpec& spec) {
    if (spec.r_override) {
        if (!(*spec.r_override > 0.0) || !std::isfinite(*spec.r_override))
            throw ParameterError("r_override must be finite and positive");
        return *spec.r_override;
    }
    return compute_r(spec).r;
}

}  // namespace

SymMatrix build_Tr(const GammaFamilySpec& spec) {
    spec.validate();
    const double r = r_factor(spec);
    const int n = spec.n;
    std::vector<double> a = build_gamma_T(spec).data();
    for (int j = 1; j < n; ++j) {
        a[j] *= r;
        a[static_cast<std::size_t>(j) * n] *= r;
    }
    return SymMatrix(n, std::move(a));
}

SymMatrix build_TrPlusD(const GammaFamilySpec& spec) {
    return add_diag(build_Tr(spec), build_d_sequence(spec));
}

SymMatrix build_Q(const GammaFamilySpec& spec) {
    spec.validate();
    const int n = spec.n;
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = std::pow(spec.gamma, std::max(i, j) + 1);
    return SymMatrix(n, std::move(a));
}

SymMatrix build_R(const GammaFamilySpec& spec) {
    spec.validate();
    const double r = r_factor(spec);
    const int n = spec.n;
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 1; j < n; ++j) {
        const double v = r * std::pow(spec.gamma, j);
        a[j] = v;
        a[static_cast<std::size_t>(j) * n] = v;
    }
    return SymMatrix(n, std::move(a));
}

Matrix build_C_a(const GammaFamilySpec& spec) {
    spec.validate();
    if (spec.gamma <= 0.0) throw ParameterError("build_C_a: gamma must be positive for a real square root");
    const double a = std::sqrt(spec.gamma);
    Matrix C(spec.n, spec.n);
    for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j <= i; ++j) C(i, j) = std::pow(a, i + 1);
    return C;
}

double factor_identity_residual(double gamma, int n) {
    if (!(gamma > 0.0) || gamma >= 1.0) throw ParameterError("factor_identity_residual: need 0 < gamma < 1");
    const int m = std::max(n + 1, static_cast<int>(std::ceil(std::log(1e-15 * (1.0 - gamma)) / std::log(gamma))) + 1);
    GammaFamilySpec spec{gamma, m, GammaVariant::C_a, std::nullopt};
    const Matrix C = build_C_a(spec);
    GammaFamilySpec qs{gamma, n, GammaVariant::Q, std::nullopt};
    const SymMatrix Q = build_Q(qs);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += C(k, i) * C(k, j);
            worst = std::max(worst, std::abs((1.0 - gamma) * s - Q(i, j)));
        }
    return worst;
}

double gamma_hs_closed_form(double gamma) {
    const double g2 = gamma * gamma;
    return 2.0 * g2 * (2.0 - g2) / ((1.0 - g2) * (1.0 - g2));
}

double gamma_hs_partial_sum(double gamma, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double v = gamma_entry(gamma, i, j);
            s += v * v;
        }
    return s;
}

std::vector<double> column(const SymMatrix& T, int j) {
    if (j < 0 || j >= T.size()) throw ParameterError("column: index out of range");
    std::vector<double> c(T.size());
    for (int i = 0; i < T.size(); ++i) c[i] = T(i, j);
    return c;
}

SymMatrix zero_row_col(const SymMatrix& T, int i0) {
    const int n = T.size();
    if (i0 < 0 || i0 >= n) throw ParameterError("zero_row_col: index out of range");
    std::vector<double> a = T.data();
    for (int k = 0; k < n; ++k) {
        a[static_cast<std::size_t>(i0) * n + k] = 0.0;
        a[static_cast<std::size_t>(k) * n + i0] = 0.0;
    }
    return SymMatrix(n, std::move(a));
}

DiagVector diag_map(const SymMatrix& T) {
    std::vector<double> d(T.size());
    for (int i = 0; i < T.size(); ++i) d[i] = T(i, i);
    return DiagVector(std::move(d));
}

std::vector<double> hadamard(const std::vector<double>& v, const std::vector<double>& w) {
    if (v.size() != w.size()) throw ParameterError("hadamard: length mismatch");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * w[i];
    return out;
}

SymMatrix block_compose(const SymMatrix& A, const SymMatrix& B) {
    const int na = A.size(), nb = B.size(), n = na + nb;
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) a[static_cast<std::size_t>(i) * n + j] = A(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) a[static_cast<std::size_t>(na + i) * n + (na + j)] = B(i, j);
    return SymMatrix(n, std::move(a));
}

SymMatrix add_diag(const SymMatrix& T, const DiagVector& d) {
    if (d.size() != T.size()) throw ParameterError("add_diag: size mismatch");
    std::vector<double> a = T.data();
    for (int i = 0; i < T.size(); ++i) a[static_cast<std::size_t>(i) * T.size() + i] += d[i];
    return SymMatrix(T.size(), std::move(a));
}

MatrixFile build_family_file(const GammaFamilySpec& spec) {
    spec.validate();
    MatrixFile mf;
    mf.n = spec.n;
    mf.metadata.family = "gamma";
    mf.metadata.gamma = spec.gamma;
    mf.metadata.variant = to_string(spec.variant);
    switch (spec.variant) {
        case GammaVariant::T: mf.entries = build_gamma_T(spec).data(); break;
        case GammaVariant::T1: mf.entries = build_T1(spec).data(); break;
        case GammaVariant::Tr: mf.entries = build_Tr(spec).data(); break;
        case GammaVariant::TrPlusD: mf.entries = build_TrPlusD(spec).data(); break;
        case GammaVariant::Q: mf.entries = build_Q(spec).data(); break;
        case GammaVariant::R: mf.entries = build_R(spec).data(); break;
        case GammaVariant::D_seq: {
            const DiagVector d = build_d_sequence(spec);
            mf.entries.assign(static_cast<std::size_t>(spec.n) * spec.n, 0.0);
            for (int i = 0; i < spec.n; ++i) mf.entries[static_cast<std::size_t>(i) * spec.n + i] = d[i];
            break;
        }
        case GammaVariant::C_a: {
            const Matrix C = build_C_a(spec);
            mf.entries = C.a;
            mf.symmetric = false;
            break;
        }
    }
    return mf;
}

void save_matrix(const std::string& path, const MatrixFile& mf) {
    if (mf.n <= 0 || mf.entries.size() != static_cast<std::size_t>(mf.n) * mf.n)
        throw ParameterError("save_matrix: inconsistent dimensions");
    json j;
    j["n"] = mf.n;
    auto rows = json::array();
    for (int i = 0; i < mf.n; ++i) {
        auto row = json::array();
        for (int k = 0; k < mf.n; ++k) row.push_back(mf.entries[static_cast<std::size_t>(i) * mf.n + k]);
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["symmetric"] = mf.symmetric;
    json meta = json::object();
    if (mf.metadata.family) meta["family"] = *mf.metadata.family;
    if (mf.metadata.gamma) meta["gamma"] = *mf.metadata.gamma;
    if (mf.metadata.variant) meta["variant"] = *mf.metadata.variant;
    if (!meta.empty()) j["metadata"] = std::move(meta);

    std::ofstream out(path);
    if (!out) throw FormatError("save_matrix: cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
}

MatrixFile load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("load_matrix: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError(std::string("load_matrix: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw FormatError("load_matrix: missing required fields 'n'/'entries'");

    MatrixFile mf;
    mf.n = j.at("n").get<int>();
    if (mf.n <= 0) throw FormatError("load_matrix: n must be positive");
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != mf.n)
        throw FormatError("load_matrix: entries are not an n-row array");
    mf.entries.reserve(static_cast<std::size_t>(mf.n) * mf.n);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != mf.n)
            throw FormatError("load_matrix: entries are not square");
        for (const auto& v : row) {
            if (!v.is_number()) throw FormatError("load_matrix: non-numeric entry");
            const double x = v.get<double>();
            if (!std::isfinite(x)) throw FormatError("load_matrix: non-finite entry");
            mf.entries.push_back(x);
        }
    }
    mf.symmetric = j.value("symmetric", true);
    if (j.contains("metadata")) {
        const auto& meta = j.at("metadata");
        if (meta.contains("family")) mf.metadata.family = meta.at("family").get<std::string>();
        if (meta.contains("gamma")) mf.metadata.gamma = meta.at("gamma").get<double>();
        if (meta.contains("variant")) mf.metadata.variant = meta.at("variant").get<std::string>();
    }
    if (mf.symmetric) {
        double asym = 0.0;
        for (int i = 0; i < mf.n; ++i)
            for (int k = 0; k < i; ++k)
                asym = std::max(asym, std::abs(mf.entries[static_cast<std::size_t>(i) * mf.n + k] -
                                               mf.entries[static_cast<std::size_t>(k) * mf.n + i]));
        if (asym > 1e-12)
            throw FormatError("load_matrix: matrix marked symmetric has asymmetry above 1e-12");
    }
    return mf;
}

SymMatrix load_sym_matrix(const std::string& path) { return load_matrix(path).to_sym(); }

}  // namespace mindiag::operator_core
