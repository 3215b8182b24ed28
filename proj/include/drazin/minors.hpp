#pragma once

#include "drazin/matrix.hpp"

#include <cstddef>
#include <vector>

namespace drazin {

/// Strictly increasing subset of {1, ..., n}.
class IndexSet {
public:
    IndexSet(std::vector<std::size_t> elements, std::size_t n);

    const std::vector<std::size_t>& elements() const { return elements_; }
    std::size_t ambient() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(std::size_t i) const;
    /// 0-based position of i inside the set; i must be a member.
    std::size_t position_of(std::size_t i) const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> elements_;
    std::size_t n_;
};

/// All k-subsets of {1..n} in lexicographic order. k == 0 yields one empty set.
std::vector<IndexSet> enum_L(std::size_t k, std::size_t n);

/// The k-subsets of {1..n} that contain i, in lexicographic order.
std::vector<IndexSet> enum_containing(std::size_t k, std::size_t n, std::size_t i);

/// |M_alpha^alpha|
GaussianRational principal_minor(const CMatrix& m, const IndexSet& alpha);

/// Sum of all order-s principal minors of a square matrix (1 <= s <= n).
GaussianRational sum_principal_minors(const CMatrix& m, std::size_t s);

/// Sum over beta in J_{r,n}{i} of the principal minor on beta of M with
/// column i replaced by b.
GaussianRational sum_minors_col_replaced(const CMatrix& m, std::size_t i, const CMatrix& b, std::size_t r);

/// Row dual: sum over alpha in I_{r,n}{j} of the principal minor on alpha of
/// M with row j replaced by b.
GaussianRational sum_minors_row_replaced(const CMatrix& m, std::size_t j, const CMatrix& b, std::size_t r);

/*
 * Precomputed linear form for sum_minors_col_replaced with fixed (M, i, r).
 *
 * Each replaced minor is linear in the replacement column, so the whole
 * sum collapses to <w, b> where w_l accumulates the cofactors of entry
 * (l, i) over every beta containing both l and i. Evaluating many columns
 * against the same M then costs one dot product each.
 */
class ColumnMinorExpansion {
public:
    ColumnMinorExpansion(const CMatrix& m, std::size_t i, std::size_t r);

    /// Same value as sum_minors_col_replaced(m, i, b, r).
    GaussianRational evaluate(const CMatrix& b) const;
    /// Evaluates against column j (1-based) of `source`.
    GaussianRational evaluate_column(const CMatrix& source, std::size_t j) const;

    const std::vector<GaussianRational>& weights() const { return weights_; }

private:
    std::vector<GaussianRational> weights_;
};

/// Row dual of ColumnMinorExpansion.
class RowMinorExpansion {
public:
    RowMinorExpansion(const CMatrix& m, std::size_t j, std::size_t r);

    /// Same value as sum_minors_row_replaced(m, j, b, r).
    GaussianRational evaluate(const CMatrix& b) const;
    /// Evaluates against row i (1-based) of `source`.
    GaussianRational evaluate_row(const CMatrix& source, std::size_t i) const;

    const std::vector<GaussianRational>& weights() const { return weights_; }

private:
    std::vector<GaussianRational> weights_;
};

} // namespace drazin
