#include "drazin/solvers.hpp"

#include "drazin/drazin.hpp"
#include "drazin/errors.hpp"
#include "drazin/minors.hpp"

#include <string>

namespace drazin {

namespace {

struct Factor {
    IndexProfile profile;
    CMatrix a_k;
    CMatrix a_k1;
    GaussianRational d;
};

Factor factor(const CMatrix& a) {
    if (!a.is_square()) throw DimensionError("coefficient matrix must be square");
    Factor f{index_of(a), {}, {}, 1};
    f.a_k = mat_pow(a, f.profile.k);
    f.a_k1 = f.a_k * a;
    if (f.profile.r > 0) f.d = sum_principal_minors(f.a_k1, f.profile.r);
    return f;
}

} // namespace

SolveReport solve_ax(const CMatrix& a, const CMatrix& b) {
    if (!a.is_square() || b.rows() != a.rows()) throw DimensionError("solve_ax: A must be n x n and B n x m");
    Factor f = factor(a);
    const CMatrix b_hat = f.a_k * b;
    CMatrix x(a.rows(), b.cols());
    if (f.profile.r > 0) {
        for (std::size_t i = 1; i <= a.rows(); ++i) {
            const ColumnMinorExpansion expansion(f.a_k1, i, f.profile.r);
            for (std::size_t j = 1; j <= b.cols(); ++j) x(i - 1, j - 1) = expansion.evaluate_column(b_hat, j) / f.d;
        }
    }
    SolveReport report{std::move(x), range_contained(b, f.a_k), f.profile, std::nullopt, f.d};
    return report;
}

CMatrix solve_vector(const CMatrix& a, const CMatrix& y) {
    if (y.cols() != 1) throw DimensionError("solve_vector: y must be a column vector");
    return solve_ax(a, y).X;
}

SolveReport solve_xa(const CMatrix& a, const CMatrix& b) {
    if (!a.is_square() || b.cols() != a.cols()) throw DimensionError("solve_xa: A must be m x m and B n x m");
    Factor f = factor(a);
    const CMatrix b_check = b * f.a_k;
    CMatrix x(b.rows(), a.cols());
    if (f.profile.r > 0) {
        for (std::size_t j = 1; j <= a.cols(); ++j) {
            const RowMinorExpansion expansion(f.a_k1, j, f.profile.r);
            for (std::size_t i = 1; i <= b.rows(); ++i) x(i - 1, j - 1) = expansion.evaluate_row(b_check, i) / f.d;
        }
    }
    SolveReport report{std::move(x), nullspace_contained(f.a_k, b), f.profile, std::nullopt, f.d};
    return report;
}

SolveReport solve_axb(const CMatrix& a, const CMatrix& b, const CMatrix& d) {
    if (!a.is_square() || !b.is_square() || d.rows() != a.rows() || d.cols() != b.rows()) {
        throw DimensionError("solve_axb: A must be n x n, B m x m and D n x m");
    }
    const std::size_t n = a.rows();
    const std::size_t m = b.rows();
    Factor fa = factor(a);
    Factor fb = factor(b);
    const CMatrix d_tilde = fa.a_k * d * fb.a_k;
    const GaussianRational denominator = fa.d * fb.d;
    const bool nontrivial = fa.profile.r > 0 && fb.profile.r > 0;

    std::vector<ColumnMinorExpansion> col_expansions;
    std::vector<RowMinorExpansion> row_expansions;
    if (nontrivial) {
        for (std::size_t i = 1; i <= n; ++i) col_expansions.emplace_back(fa.a_k1, i, fa.profile.r);
        for (std::size_t j = 1; j <= m; ++j) row_expansions.emplace_back(fb.a_k1, j, fb.profile.r);
    }

    // d^B_{.j}: l-th component is the replaced-row sum of B^{k2+1} at row j
    // against row l of D~.
    std::vector<CMatrix> dB;
    dB.reserve(m);
    for (std::size_t j = 1; j <= m; ++j) {
        CMatrix column(n, 1);
        if (nontrivial) {
            for (std::size_t l = 1; l <= n; ++l) column(l - 1, 0) = row_expansions[j - 1].evaluate_row(d_tilde, l);
        }
        dB.push_back(std::move(column));
    }

    // d^A_{i.}: t-th component is the replaced-column sum of A^{k1+1} at
    // column i against column t of D~.
    std::vector<CMatrix> dA;
    dA.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        CMatrix row(1, m);
        if (nontrivial) {
            for (std::size_t t = 1; t <= m; ++t) row(0, t - 1) = col_expansions[i - 1].evaluate_column(d_tilde, t);
        }
        dA.push_back(std::move(row));
    }

    CMatrix x_col(n, m);
    CMatrix x_row(n, m);
    if (nontrivial) {
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= m; ++j) {
                x_col(i - 1, j - 1) = col_expansions[i - 1].evaluate(dB[j - 1]) / denominator;
                x_row(i - 1, j - 1) = row_expansions[j - 1].evaluate(dA[i - 1]) / denominator;
            }
        }
    }
    if (!(x_col == x_row)) throw RepresentationMismatch("column and row evaluations of AXB = D differ");

    const bool restricted = range_contained(d, fa.a_k) && nullspace_contained(fb.a_k, d);
    SolveReport report{std::move(x_col), restricted, fa.profile, fb.profile, denominator};
    report.d_tilde = d_tilde;
    report.dB_columns = std::move(dB);
    report.dA_rows = std::move(dA);
    return report;
}

} // namespace drazin
