#pragma once

#include "drazin/exactnum.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace drazin {

/*
 * Dense row-major matrix of Gaussian rationals.
 *
 * Element access through operator() is 0-based. The named linear-algebra
 * operations below (replace_col, column, minors, ...) take 1-based row and
 * column indices so formulas transcribe directly from their usual notation.
 */
class CMatrix {
public:
    CMatrix() = default;
    /// rows x cols zero matrix; both dimensions must be >= 1.
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
    /// Nested-list literal, one inner list per row.
    CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// n x 1 matrix holding the given values.
    static CMatrix column_vector(std::vector<GaussianRational> values);
    /// 1 x n matrix holding the given values.
    static CMatrix row_vector(std::vector<GaussianRational> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const GaussianRational> entries() const { return entries_; }

    /// Column j (1-based) as an n x 1 matrix.
    CMatrix column(std::size_t j) const;
    /// Row i (1-based) as a 1 x m matrix.
    CMatrix row(std::size_t i) const;
    CMatrix transpose() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(const GaussianRational& c);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, const GaussianRational& c) { return a *= c; }
    friend CMatrix operator*(const GaussianRational& c, CMatrix a) { return a *= c; }
    CMatrix operator-() const;

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> entries_;
};

std::ostream& operator<<(std::ostream& os, const CMatrix& m);

/// Index k of a square matrix together with r = rank(A^k).
struct IndexProfile {
    std::size_t k = 0;
    std::size_t r = 0;

    friend bool operator==(const IndexProfile&, const IndexProfile&) = default;
};

/// Exact product. Throws DimensionError when a.cols() != b.rows().
CMatrix mat_mul(const CMatrix& a, const CMatrix& b);
inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mat_mul(a, b); }

/// a^p by repeated squaring; a^0 is the identity. Requires a square matrix.
CMatrix mat_pow(const CMatrix& a, std::size_t p);

/// Determinant by fraction-free elimination. Requires a square matrix.
GaussianRational det(const CMatrix& a);

std::size_t rank(const CMatrix& a);

/// Copy of a with column j (1-based) replaced by the column vector b.
CMatrix replace_col(const CMatrix& a, std::size_t j, const CMatrix& b);
/// Copy of a with row i (1-based) replaced by the row vector b.
CMatrix replace_row(const CMatrix& a, std::size_t i, const CMatrix& b);

/// Square submatrix on the given rows and columns (1-based, any order).
CMatrix submatrix(const CMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

CMatrix hstack(const CMatrix& left, const CMatrix& right);
CMatrix vstack(const CMatrix& top, const CMatrix& bottom);

/// R(m) is contained in R(n): rank([n | m]) == rank(n).
bool range_contained(const CMatrix& m, const CMatrix& n);

/// N(m) contains N(n_of): rank([n_of ; m]) == rank(n_of).
bool nullspace_contained(const CMatrix& n_of, const CMatrix& m);

} // namespace drazin
