#pragma once

#include "drazin/matrix.hpp"

#include <optional>
#include <vector>

namespace drazin {

/*
 * Drazin-inverse solution of a restricted matrix equation.
 *
 * X is always the Drazin-inverse solution (A^D B, B A^D or A^D D B^D); the
 * flag reports whether the range/null-space hypotheses under which that
 * solution is the unique restricted solution actually hold.
 */
struct SolveReport {
    CMatrix X;
    bool restriction_satisfied = false;
    IndexProfile profile_a;
    std::optional<IndexProfile> profile_b;
    /// Common denominator of every entry of X.
    GaussianRational denominator;
    /// AXB = D only: A^{k1} D B^{k2}.
    std::optional<CMatrix> d_tilde;
    /// AXB = D only: the column vectors d^B_{.j}, j = 1..m.
    std::optional<std::vector<CMatrix>> dB_columns;
    /// AXB = D only: the row vectors d^A_{i.}, i = 1..n.
    std::optional<std::vector<CMatrix>> dA_rows;
};

/// AX = B with A square n x n and B n x m. Flag: R(B) in R(A^k).
SolveReport solve_ax(const CMatrix& a, const CMatrix& b);

/// Single right-hand side of AX = B; y is n x 1, the result is A^D y.
CMatrix solve_vector(const CMatrix& a, const CMatrix& y);

/// XA = B with A square m x m and B n x m. Flag: N(B) contains N(A^k).
SolveReport solve_xa(const CMatrix& a, const CMatrix& b);

/*
 * AXB = D with A n x n, B m x m, D n x m.
 *
 * X is evaluated twice: once through the columns d^B_{.j} and the
 * replaced-column sums of A^{k1+1}, once through the rows d^A_{i.} and the
 * replaced-row sums of B^{k2+1}. Disagreement throws RepresentationMismatch.
 * Flag: R(D) in R(A^{k1}) and N(D) contains N(B^{k2}).
 */
SolveReport solve_axb(const CMatrix& a, const CMatrix& b, const CMatrix& d);

} // namespace drazin
