#pragma once

#include "drazin/matrix.hpp"

#include <optional>
#include <string_view>

namespace drazin {

enum class Method { column, row, oracle };

std::string_view to_string(Method method);

/*
 * A Drazin (or group) inverse together with the data its determinantal
 * formula is parameterised by.
 *
 * `denominator` is d_r, the sum of the order-r principal minors of A^{k+1}.
 * For r == 0 (nilpotent A) the inverse is zero and d_0 is taken as 1, the
 * order-zero coefficient of det(lambda I + A^{k+1}).
 */
struct DrazinResult {
    CMatrix inverse;
    IndexProfile profile;
    GaussianRational denominator;
    Method method = Method::column;
};

/// Smallest k with rank(A^{k+1}) == rank(A^k), with r = rank(A^k).
IndexProfile index_of(const CMatrix& a);

/// d_r for the given profile (1 when r == 0).
GaussianRational drazin_denominator(const CMatrix& a, const IndexProfile& profile);

/// Column determinantal representation: entry (i, j) is the replaced-column
/// minor sum of A^{k+1} against column j of A^k, divided by d_r.
DrazinResult drazin_col(const CMatrix& a);

/// Row determinantal representation: entry (i, j) is the replaced-row minor
/// sum of A^{k+1} at row j against row i of A^k, divided by d_r.
DrazinResult drazin_row(const CMatrix& a);

/// Dispatches to drazin_col, drazin_row or drazin_oracle.
DrazinResult drazin_inverse(const CMatrix& a, Method method = Method::column);

/// Drazin inverse restricted to index <= 1. Throws IndexTooLarge otherwise.
DrazinResult group_inverse(const CMatrix& a, Method method = Method::column);

/// A^D A through the replaced-column sums against the columns of A^{k+1}.
CMatrix proj_AdA(const CMatrix& a);

/// A A^D through the replaced-row sums against the rows of A^{k+1}.
CMatrix proj_AAd(const CMatrix& a);

enum class OracleSide {
    /// lim (lambda I + A^{p+1})^{-1} A^p
    left,
    /// lim A^p (lambda I + A^{p+1})^{-1}
    right,
};

/*
 * Symbolic limit evaluation of the Drazin inverse, independent of the rank
 * and minor-sum machinery. The adjugate and determinant of lambda I + A^{p+1}
 * are built as polynomials in lambda (Faddeev-LeVerrier), multiplied into
 * A^p, and each entry's limit at lambda = 0 is taken exactly.
 *
 * The limit equals A^D for every p >= Ind A; `power` defaults to n, which
 * always qualifies, so no index computation is needed.
 */
CMatrix drazin_oracle(const CMatrix& a, OracleSide side = OracleSide::left,
                      std::optional<std::size_t> power = std::nullopt);

struct DrazinAxioms {
    bool power_left = false;   ///< A^{k+1} X == A^k
    bool reflexive = false;    ///< X A X == X
    bool commutes = false;     ///< A X == X A
    bool power_right = false;  ///< X A^{k+1} == A^k
    IndexProfile profile;

    bool all() const { return power_left && reflexive && commutes && power_right; }
};

/// Checks X against the defining equations of the Drazin inverse of A.
DrazinAxioms verify_drazin(const CMatrix& a, const CMatrix& x);

} // namespace drazin
