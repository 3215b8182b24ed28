#include "drazin/minors.hpp"

#include "drazin/errors.hpp"

#include <algorithm>
#include <string>

namespace drazin {

namespace {

void require_square_n(const CMatrix& m, const char* op) {
    if (!m.is_square()) throw DimensionError(std::string(op) + ": matrix must be square");
}

void require_order(std::size_t r, std::size_t n, const char* op) {
    if (r < 1 || r > n) {
        throw DimensionError(std::string(op) + ": order " + std::to_string(r) + " outside [1, " +
                             std::to_string(n) + "]");
    }
}

void require_index(std::size_t i, std::size_t n, const char* op) {
    if (i < 1 || i > n) throw DimensionError(std::string(op) + ": index " + std::to_string(i) + " out of range");
}

// Determinant of s with row `skip_row` and column `skip_col` (0-based) removed.
GaussianRational minor_excluding(const CMatrix& s, std::size_t skip_row, std::size_t skip_col) {
    const std::size_t n = s.rows();
    if (n == 1) return 1;
    CMatrix reduced(n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == skip_row) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
            if (c == skip_col) continue;
            reduced(rr, cc++) = s(r, c);
        }
        ++rr;
    }
    return det(reduced);
}

GaussianRational signed_cofactor(const CMatrix& s, std::size_t row, std::size_t col) {
    GaussianRational m = minor_excluding(s, row, col);
    return (row + col) % 2 ? -m : m;
}

} // namespace

IndexSet::IndexSet(std::vector<std::size_t> elements, std::size_t n) : elements_(std::move(elements)), n_(n) {
    for (std::size_t p = 0; p < elements_.size(); ++p) {
        if (elements_[p] < 1 || elements_[p] > n_) throw DimensionError("index set element outside [1, n]");
        if (p > 0 && elements_[p] <= elements_[p - 1]) throw DimensionError("index set must be strictly increasing");
    }
}

bool IndexSet::contains(std::size_t i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

std::size_t IndexSet::position_of(std::size_t i) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), i);
    if (it == elements_.end() || *it != i) throw DimensionError("index not in set");
    return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<IndexSet> enum_L(std::size_t k, std::size_t n) {
    if (k > n) throw DimensionError("enum_L: k > n");
    std::vector<IndexSet> out;
    std::vector<std::size_t> current(k);
    for (std::size_t p = 0; p < k; ++p) current[p] = p + 1;
    while (true) {
        out.emplace_back(current, n);
        // Rightmost position that can still advance.
        std::size_t p = k;
        while (p > 0 && current[p - 1] == n - k + p) --p;
        if (p == 0) break;
        ++current[p - 1];
        for (std::size_t q = p; q < k; ++q) current[q] = current[q - 1] + 1;
    }
    return out;
}

std::vector<IndexSet> enum_containing(std::size_t k, std::size_t n, std::size_t i) {
    require_index(i, n, "enum_containing");
    require_order(k, n, "enum_containing");
    std::vector<IndexSet> out;
    for (auto& alpha : enum_L(k, n)) {
        if (alpha.contains(i)) out.push_back(std::move(alpha));
    }
    return out;
}

GaussianRational principal_minor(const CMatrix& m, const IndexSet& alpha) {
    if (alpha.size() == 0) return 1;
    return det(submatrix(m, alpha.elements(), alpha.elements()));
}

GaussianRational sum_principal_minors(const CMatrix& m, std::size_t s) {
    require_square_n(m, "sum_principal_minors");
    require_order(s, m.rows(), "sum_principal_minors");
    GaussianRational total;
    for (const auto& alpha : enum_L(s, m.rows())) total += principal_minor(m, alpha);
    return total;
}

GaussianRational sum_minors_col_replaced(const CMatrix& m, std::size_t i, const CMatrix& b, std::size_t r) {
    require_square_n(m, "sum_minors_col_replaced");
    const std::size_t n = m.rows();
    require_index(i, n, "sum_minors_col_replaced");
    require_order(r, n, "sum_minors_col_replaced");
    const CMatrix replaced = replace_col(m, i, b);
    GaussianRational total;
    for (const auto& beta : enum_containing(r, n, i)) total += principal_minor(replaced, beta);
    return total;
}

GaussianRational sum_minors_row_replaced(const CMatrix& m, std::size_t j, const CMatrix& b, std::size_t r) {
    require_square_n(m, "sum_minors_row_replaced");
    const std::size_t n = m.rows();
    require_index(j, n, "sum_minors_row_replaced");
    require_order(r, n, "sum_minors_row_replaced");
    const CMatrix replaced = replace_row(m, j, b);
    GaussianRational total;
    for (const auto& alpha : enum_containing(r, n, j)) total += principal_minor(replaced, alpha);
    return total;
}

ColumnMinorExpansion::ColumnMinorExpansion(const CMatrix& m, std::size_t i, std::size_t r) {
    require_square_n(m, "ColumnMinorExpansion");
    const std::size_t n = m.rows();
    require_index(i, n, "ColumnMinorExpansion");
    require_order(r, n, "ColumnMinorExpansion");
    weights_.resize(n);
    for (const auto& beta : enum_containing(r, n, i)) {
        const CMatrix s = submatrix(m, beta.elements(), beta.elements());
        const std::size_t p = beta.position_of(i);
        for (std::size_t q = 0; q < beta.size(); ++q) weights_[beta.elements()[q] - 1] += signed_cofactor(s, q, p);
    }
}

GaussianRational ColumnMinorExpansion::evaluate(const CMatrix& b) const {
    if (b.cols() != 1 || b.rows() != weights_.size()) throw DimensionError("replacement column has wrong shape");
    return evaluate_column(b, 1);
}

GaussianRational ColumnMinorExpansion::evaluate_column(const CMatrix& source, std::size_t j) const {
    if (source.rows() != weights_.size()) throw DimensionError("source row count differs from expansion size");
    require_index(j, source.cols(), "evaluate_column");
    GaussianRational total;
    for (std::size_t l = 0; l < weights_.size(); ++l) {
        if (!weights_[l].is_zero()) total += weights_[l] * source(l, j - 1);
    }
    return total;
}

RowMinorExpansion::RowMinorExpansion(const CMatrix& m, std::size_t j, std::size_t r) {
    require_square_n(m, "RowMinorExpansion");
    const std::size_t n = m.rows();
    require_index(j, n, "RowMinorExpansion");
    require_order(r, n, "RowMinorExpansion");
    weights_.resize(n);
    for (const auto& alpha : enum_containing(r, n, j)) {
        const CMatrix s = submatrix(m, alpha.elements(), alpha.elements());
        const std::size_t p = alpha.position_of(j);
        for (std::size_t q = 0; q < alpha.size(); ++q) weights_[alpha.elements()[q] - 1] += signed_cofactor(s, p, q);
    }
}

GaussianRational RowMinorExpansion::evaluate(const CMatrix& b) const {
    if (b.rows() != 1 || b.cols() != weights_.size()) throw DimensionError("replacement row has wrong shape");
    return evaluate_row(b, 1);
}

GaussianRational RowMinorExpansion::evaluate_row(const CMatrix& source, std::size_t i) const {
    if (source.cols() != weights_.size()) throw DimensionError("source column count differs from expansion size");
    require_index(i, source.rows(), "evaluate_row");
    GaussianRational total;
    for (std::size_t l = 0; l < weights_.size(); ++l) {
        if (!weights_[l].is_zero()) total += weights_[l] * source(i - 1, l);
    }
    return total;
}

} // namespace drazin
