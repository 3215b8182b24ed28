#include "drazin/matrix.hpp"

#include "drazin/errors.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace drazin {

namespace {

std::string shape(const CMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_square(const CMatrix& a, const char* op) {
    if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix is " + shape(a) + ", expected square");
}

/*
 * Fraction-free (Bareiss) forward elimination in place. Returns the number
 * of pivots found; `swaps` counts row interchanges. For a square matrix of
 * full rank the last diagonal entry equals the determinant up to the swap
 * sign.
 */
std::size_t bareiss_eliminate(CMatrix& m, std::size_t& swaps) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    GaussianRational prev(1);
    std::size_t pivots = 0;
    swaps = 0;
    for (std::size_t col = 0; col < cols && pivots < rows; ++col) {
        std::size_t p = pivots;
        while (p < rows && m(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != pivots) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(pivots, j));
            ++swaps;
        }
        const GaussianRational pivot = m(pivots, col);
        for (std::size_t i = pivots + 1; i < rows; ++i) {
            const GaussianRational factor = m(i, col);
            for (std::size_t j = col + 1; j < cols; ++j) {
                GaussianRational v = pivot * m(i, j);
                if (!factor.is_zero()) v -= factor * m(pivots, j);
                v /= prev;
                m(i, j) = std::move(v);
            }
            m(i, col) = GaussianRational{};
        }
        prev = pivot;
        ++pivots;
    }
    return pivots;
}

} // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols) {
        throw DimensionError("expected " + std::to_string(rows * cols) + " entries, got " +
                             std::to_string(entries_.size()));
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

CMatrix CMatrix::column_vector(std::vector<GaussianRational> values) {
    const std::size_t n = values.size();
    return {n, 1, std::move(values)};
}

CMatrix CMatrix::row_vector(std::vector<GaussianRational> values) {
    const std::size_t n = values.size();
    return {1, n, std::move(values)};
}

bool CMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& z) { return z.is_zero(); });
}

CMatrix CMatrix::column(std::size_t j) const {
    if (j < 1 || j > cols_) throw DimensionError("column index " + std::to_string(j) + " out of range");
    CMatrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, j - 1);
    return out;
}

CMatrix CMatrix::row(std::size_t i) const {
    if (i < 1 || i > rows_) throw DimensionError("row index " + std::to_string(i) + " out of range");
    CMatrix out(1, cols_);
    for (std::size_t c = 0; c < cols_; ++c) out(0, c) = (*this)(i - 1, c);
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("sum of " + shape(*this) + " and " + shape(o));
    for (std::size_t p = 0; p < entries_.size(); ++p) entries_[p] += o.entries_[p];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("difference of " + shape(*this) + " and " + shape(o));
    for (std::size_t p = 0; p < entries_.size(); ++p) entries_[p] -= o.entries_[p];
    return *this;
}

CMatrix& CMatrix::operator*=(const GaussianRational& c) {
    for (auto& z : entries_) z *= c;
    return *this;
}

CMatrix CMatrix::operator-() const {
    CMatrix out = *this;
    for (auto& z : out.entries_) z = -z;
    return out;
}

std::ostream& operator<<(std::ostream& os, const CMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("product of " + shape(a) + " and " + shape(b));
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t s = 0; s < a.cols(); ++s) {
            const GaussianRational& lhs = a(i, s);
            if (lhs.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(s, j).is_zero()) out(i, j) += lhs * b(s, j);
            }
        }
    }
    return out;
}

CMatrix mat_pow(const CMatrix& a, std::size_t p) {
    require_square(a, "mat_pow");
    CMatrix result = CMatrix::identity(a.rows());
    CMatrix base = a;
    while (p > 0) {
        if (p & 1U) result = result * base;
        p >>= 1U;
        if (p > 0) base = base * base;
    }
    return result;
}

GaussianRational det(const CMatrix& a) {
    require_square(a, "det");
    CMatrix work = a;
    std::size_t swaps = 0;
    if (bareiss_eliminate(work, swaps) < a.rows()) return {};
    GaussianRational d = work(a.rows() - 1, a.cols() - 1);
    return swaps % 2 ? -d : d;
}

std::size_t rank(const CMatrix& a) {
    CMatrix work = a;
    std::size_t swaps = 0;
    return bareiss_eliminate(work, swaps);
}

CMatrix replace_col(const CMatrix& a, std::size_t j, const CMatrix& b) {
    if (j < 1 || j > a.cols()) throw DimensionError("column index " + std::to_string(j) + " out of range");
    if (b.cols() != 1 || b.rows() != a.rows()) throw DimensionError("replacement column has shape " + shape(b));
    CMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, j - 1) = b(r, 0);
    return out;
}

CMatrix replace_row(const CMatrix& a, std::size_t i, const CMatrix& b) {
    if (i < 1 || i > a.rows()) throw DimensionError("row index " + std::to_string(i) + " out of range");
    if (b.rows() != 1 || b.cols() != a.cols()) throw DimensionError("replacement row has shape " + shape(b));
    CMatrix out = a;
    for (std::size_t c = 0; c < a.cols(); ++c) out(i - 1, c) = b(0, c);
    return out;
}

CMatrix submatrix(const CMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    CMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] < 1 || rows[r] > a.rows()) throw DimensionError("submatrix row out of range");
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c] < 1 || cols[c] > a.cols()) throw DimensionError("submatrix column out of range");
            out(r, c) = a(rows[r] - 1, cols[c] - 1);
        }
    }
    return out;
}

CMatrix hstack(const CMatrix& left, const CMatrix& right) {
    if (left.rows() != right.rows()) throw DimensionError("hstack of " + shape(left) + " and " + shape(right));
    CMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
    }
    return out;
}

CMatrix vstack(const CMatrix& top, const CMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionError("vstack of " + shape(top) + " and " + shape(bottom));
    CMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t c = 0; c < top.cols(); ++c) {
        for (std::size_t r = 0; r < top.rows(); ++r) out(r, c) = top(r, c);
        for (std::size_t r = 0; r < bottom.rows(); ++r) out(top.rows() + r, c) = bottom(r, c);
    }
    return out;
}

bool range_contained(const CMatrix& m, const CMatrix& n) {
    if (m.rows() != n.rows()) throw DimensionError("range_contained: row counts differ");
    return rank(hstack(n, m)) == rank(n);
}

bool nullspace_contained(const CMatrix& n_of, const CMatrix& m) {
    if (m.cols() != n_of.cols()) throw DimensionError("nullspace_contained: column counts differ");
    return rank(vstack(n_of, m)) == rank(n_of);
}

} // namespace drazin
