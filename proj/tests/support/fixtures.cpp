#include "fixtures.hpp"

#include <utility>

namespace fixtures {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(CMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const GaussianRational inv = m(row, col).reciprocal();
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const GaussianRational f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<CMatrix> gauss_jordan_inverse(const CMatrix& a) {
    const std::size_t n = a.rows();
    CMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
    CMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

GaussianRational laplace_det(const CMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    GaussianRational total;
    for (std::size_t c = 0; c < n; ++c) {
        if (a(0, c).is_zero()) continue;
        CMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t cc = 0, k = 0; cc < n; ++cc)
                if (cc != c) minor(r - 1, k++) = a(r, cc);
        GaussianRational term = a(0, c) * laplace_det(minor);
        if (c % 2) total -= term;
        else total += term;
    }
    return total;
}

std::size_t reference_rank(const CMatrix& a) {
    CMatrix work = a;
    return rref(work).size();
}

std::vector<CMatrix> nullspace_basis(const CMatrix& a) {
    CMatrix work = a;
    const auto pivots = rref(work);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<CMatrix> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        CMatrix v(a.cols(), 1);
        v(free, 0) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -work(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

CMatrix Generator::matrix(std::size_t rows, std::size_t cols, long bound) {
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = gaussian_int(bound);
    return m;
}

CMatrix Generator::invertible(std::size_t n, long bound) {
    while (true) {
        CMatrix m = matrix(n, n, bound);
        if (gauss_jordan_inverse(m)) return m;
    }
}

std::pair<CMatrix, CMatrix> Generator::unimodular_with_inverse(std::size_t n) {
    CMatrix lower = CMatrix::identity(n);
    CMatrix upper = CMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < r; ++c) lower(r, c) = gaussian_int(1);
        for (std::size_t c = r + 1; c < n; ++c) upper(r, c) = gaussian_int(1);
    }
    CMatrix s = lower * upper;
    CMatrix s_inv = *gauss_jordan_inverse(s);
    return {std::move(s), std::move(s_inv)};
}

CoreNilpotent Generator::core_nilpotent(std::size_t core, const std::vector<std::size_t>& blocks) {
    std::size_t n = core;
    for (auto b : blocks) n += b;
    CMatrix core_block = core > 0 ? invertible(core, 2) : CMatrix::identity(1);
    CMatrix block(n, n);
    CMatrix block_inv(n, n);
    if (core > 0) {
        const CMatrix core_inv = *gauss_jordan_inverse(core_block);
        for (std::size_t r = 0; r < core; ++r)
            for (std::size_t c = 0; c < core; ++c) {
                block(r, c) = core_block(r, c);
                block_inv(r, c) = core_inv(r, c);
            }
    }
    std::size_t offset = core;
    std::size_t index = 0;
    for (auto b : blocks) {
        for (std::size_t p = 0; p + 1 < b; ++p) block(offset + p, offset + p + 1) = 1;
        offset += b;
        index = std::max(index, b);
    }
    const auto [s, s_inv] = unimodular_with_inverse(n);
    return {s * block * s_inv, s * block_inv * s_inv, index, core};
}

CoreNilpotent Generator::random_core_nilpotent(std::size_t n) {
    const std::size_t nil = static_cast<std::size_t>(uniform(1, static_cast<long>(n)));
    std::vector<std::size_t> blocks;
    std::size_t left = nil;
    while (left > 0) {
        const std::size_t b = static_cast<std::size_t>(uniform(1, static_cast<long>(left)));
        blocks.push_back(b);
        left -= b;
    }
    return core_nilpotent(n - nil, blocks);
}

CMatrix Generator::rank_deficient_product(std::size_t n) {
    const std::size_t p = static_cast<std::size_t>(uniform(1, static_cast<long>(n) - 1));
    return matrix(n, p, 2) * matrix(p, n, 2);
}

CMatrix Generator::singular(std::size_t n) {
    flip_ = !flip_;
    return flip_ ? rank_deficient_product(n) : random_core_nilpotent(n).a;
}

} // namespace fixtures
