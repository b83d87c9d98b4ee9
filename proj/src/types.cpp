#include "mindiag/types.hpp"

#include <cmath>

namespace mindiag {

const char* to_string(GammaVariant v) {
    switch (v) {
        case GammaVariant::T: return "T";
        case GammaVariant::T1: return "T1";
        case GammaVariant::D_seq: return "D_seq";
        case GammaVariant::Tr: return "Tr";
        case GammaVariant::TrPlusD: return "TrPlusD";
        case GammaVariant::Q: return "Q";
        case GammaVariant::R: return "R";
        case GammaVariant::C_a: return "C_a";
    }
    return "?";
}

std::optional<GammaVariant> variant_from_string(const std::string& s) {
    if (s == "T") return GammaVariant::T;
    if (s == "T1") return GammaVariant::T1;
    if (s == "D_seq") return GammaVariant::D_seq;
    if (s == "Tr") return GammaVariant::Tr;
    if (s == "TrPlusD") return GammaVariant::TrPlusD;
    if (s == "Q") return GammaVariant::Q;
    if (s == "R") return GammaVariant::R;
    if (s == "C_a") return GammaVariant::C_a;
    return std::nullopt;
}

SymMatrix MatrixFile::to_sym() const {
    if (!symmetric) throw FormatError("MatrixFile: stored matrix is not symmetric");
    std::vector<double> sym(entries);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            const std::size_t ij = static_cast<std::size_t>(i) * n + j;
            const std::size_t ji = static_cast<std::size_t>(j) * n + i;
            const double m = 0.5 * (sym[ij] + sym[ji]);
            sym[ij] = sym[ji] = m;
        }
    return SymMatrix(n, std::move(sym));
}

MatrixFile MatrixFile::from_sym(const SymMatrix& m, MatrixMetadata meta) {
    MatrixFile mf;
    mf.n = m.size();
    mf.entries = m.data();
    mf.symmetric = true;
    mf.metadata = std::move(meta);
    return mf;
}

}  // namespace mindiag
