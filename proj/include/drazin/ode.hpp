#pragma once

#include "drazin/matrix.hpp"

#include <cstddef>
#include <vector>

namespace drazin {

/// Matrix-valued polynomial sum_m C_m t^m, constant term first. Trailing
/// zero coefficients are trimmed; the zero polynomial keeps its shape but
/// has no coefficients.
class MatrixPolynomial {
public:
    MatrixPolynomial(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    explicit MatrixPolynomial(std::vector<CMatrix> coefficients);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<CMatrix>& coefficients() const { return coeffs_; }
    /// Coefficient of t^m; a zero matrix beyond the degree.
    CMatrix coefficient(std::size_t m) const;

    /// Exact derivative d/dt.
    MatrixPolynomial derivative() const;
    CMatrix evaluate(const GaussianRational& t) const;

    MatrixPolynomial& operator+=(const MatrixPolynomial& o);
    MatrixPolynomial& operator-=(const MatrixPolynomial& o);
    friend MatrixPolynomial operator+(MatrixPolynomial a, const MatrixPolynomial& b) { return a += b; }
    friend MatrixPolynomial operator-(MatrixPolynomial a, const MatrixPolynomial& b) { return a -= b; }
    /// Coefficientwise A * C_m.
    friend MatrixPolynomial operator*(const CMatrix& a, const MatrixPolynomial& p);
    /// Coefficientwise C_m * A.
    friend MatrixPolynomial operator*(const MatrixPolynomial& p, const CMatrix& a);

    MatrixPolynomial transpose() const;

    friend bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim();

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CMatrix> coeffs_;
};

/*
 * Partial (G = 0) polynomial solution of X' + AX = B:
 *
 *   X(t) = A^D B + sum_{m=1..k} ((-1)^{m-1} / m!) (A^{m-1} B - A^D A^m B) t^m
 *
 * where A^D B and A^D A^m B come from the replaced-column minor sums of
 * A^{k+1} against the columns of A^k B and A^{k+m} B.
 */
MatrixPolynomial ode_left_partial(const CMatrix& a, const CMatrix& b);

/// Dual for X' + XA = B, with B A^D and B A^m A^D taken from the
/// replaced-row minor sums against the rows of B A^k and B A^{k+m}.
MatrixPolynomial ode_right_partial(const CMatrix& a, const CMatrix& b);

/// X'(t) + A X(t) - B.
MatrixPolynomial residual_left(const CMatrix& a, const CMatrix& b, const MatrixPolynomial& x);

/// X'(t) + X(t) A - B.
MatrixPolynomial residual_right(const CMatrix& a, const CMatrix& b, const MatrixPolynomial& x);

} // namespace drazin
