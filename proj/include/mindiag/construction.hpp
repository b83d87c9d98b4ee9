// Hypothesis checking and the orthogonality-diagonal construction for the
// arrow-dominated minimal operators (zero diagonal entry at a distinguished
// index whose column dominates the rest of the operator).
#pragma once

#include "mindiag/types.hpp"

namespace mindiag::construction {

struct Caso3Report {
    int i0 = 0;
    bool hyp1_real = true;           // real entries (structural for SymMatrix)
    bool hyp2_nonzero_row = false;   // T_{i0,i0} = 0 and T_{i0,n} != 0 for n != i0
    bool hyp3_dominance = false;     // ||c_{i0}(T)|| >= ||T^[i0]||
    double dominance_margin = 0.0;   // ||c_{i0}(T)|| - ||T^[i0]||
    double hyp4_orthogonality = 0.0; // max_n |<c_{i0}(T), c_n(T)>| over n != i0
    bool hyp4_ok = false;
    DiagVector minimal_diag;         // the diagonal of T itself
    double column_norm = 0.0;
    double op_norm = 0.0;
    double norm_identity_residual = 0.0;  // | ||T|| - ||c_{i0}(T)|| |
    bool all_hypotheses() const { return hyp1_real && hyp2_nonzero_row && hyp3_dominance && hyp4_ok; }
};

/// Evaluate the four hypotheses with numerical margins; i0 is 0-based.
Caso3Report verify_caso3(const SymMatrix& T, int i0);

/// Diagonal d with d[i0] = 0 making every column of T_off + Diag(d)
/// orthogonal to column i0. T_off must have zero diagonal and no zero entry
/// in row i0 away from the diagonal.
DiagVector solve_orthogonal_diagonal(const SymMatrix& T_off, int i0);

/// Index of the column with the largest norm among those with zero diagonal
/// entry and fully nonzero off-diagonal row, or -1 when none qualifies.
int candidate_i0(const SymMatrix& T);

}  // namespace mindiag::construction
