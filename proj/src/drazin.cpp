#include "drazin/drazin.hpp"

#include "drazin/errors.hpp"
#include "drazin/minors.hpp"

#include <string>
#include <vector>

namespace drazin {

namespace {

void require_square(const CMatrix& a, const char* op) {
    if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix must be square");
}

struct Powers {
    IndexProfile profile;
    CMatrix a_k;       // A^k
    CMatrix a_k1;      // A^{k+1}
};

Powers index_powers(const CMatrix& a) {
    require_square(a, "index_of");
    const std::size_t n = a.rows();
    CMatrix current = CMatrix::identity(n);
    std::size_t current_rank = n;
    for (std::size_t k = 0;; ++k) {
        CMatrix next = current * a;
        const std::size_t next_rank = rank(next);
        if (next_rank == current_rank) return {{k, current_rank}, std::move(current), std::move(next)};
        current = std::move(next);
        current_rank = next_rank;
    }
}

// Entry (i, j) = ColumnMinorExpansion(M, i, r) . source_{.j} / d, for all i, j.
CMatrix column_form(const CMatrix& m, std::size_t r, const CMatrix& source, const GaussianRational& d) {
    CMatrix out(m.rows(), source.cols());
    if (r == 0) return out;
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        const ColumnMinorExpansion expansion(m, i, r);
        for (std::size_t j = 1; j <= source.cols(); ++j) out(i - 1, j - 1) = expansion.evaluate_column(source, j) / d;
    }
    return out;
}

// Entry (i, j) = RowMinorExpansion(M, j, r) . source_{i.} / d, for all i, j.
CMatrix row_form(const CMatrix& m, std::size_t r, const CMatrix& source, const GaussianRational& d) {
    CMatrix out(source.rows(), m.cols());
    if (r == 0) return out;
    for (std::size_t j = 1; j <= m.cols(); ++j) {
        const RowMinorExpansion expansion(m, j, r);
        for (std::size_t i = 1; i <= source.rows(); ++i) out(i - 1, j - 1) = expansion.evaluate_row(source, i) / d;
    }
    return out;
}

} // namespace

std::string_view to_string(Method method) {
    switch (method) {
    case Method::column: return "column";
    case Method::row: return "row";
    case Method::oracle: return "oracle";
    }
    return "unknown";
}

IndexProfile index_of(const CMatrix& a) { return index_powers(a).profile; }

GaussianRational drazin_denominator(const CMatrix& a, const IndexProfile& profile) {
    if (profile.r == 0) return 1;
    return sum_principal_minors(mat_pow(a, profile.k + 1), profile.r);
}

DrazinResult drazin_col(const CMatrix& a) {
    const Powers p = index_powers(a);
    GaussianRational d = p.profile.r == 0 ? GaussianRational(1) : sum_principal_minors(p.a_k1, p.profile.r);
    CMatrix inverse = column_form(p.a_k1, p.profile.r, p.a_k, d);
    return {std::move(inverse), p.profile, std::move(d), Method::column};
}

DrazinResult drazin_row(const CMatrix& a) {
    const Powers p = index_powers(a);
    GaussianRational d = p.profile.r == 0 ? GaussianRational(1) : sum_principal_minors(p.a_k1, p.profile.r);
    CMatrix inverse = row_form(p.a_k1, p.profile.r, p.a_k, d);
    return {std::move(inverse), p.profile, std::move(d), Method::row};
}

DrazinResult drazin_inverse(const CMatrix& a, Method method) {
    switch (method) {
    case Method::column: return drazin_col(a);
    case Method::row: return drazin_row(a);
    case Method::oracle: {
        const IndexProfile profile = index_of(a);
        return {drazin_oracle(a), profile, drazin_denominator(a, profile), Method::oracle};
    }
    }
    throw std::invalid_argument("unknown method");
}

DrazinResult group_inverse(const CMatrix& a, Method method) {
    if (index_of(a).k > 1) throw IndexTooLarge();
    return drazin_inverse(a, method);
}

CMatrix proj_AdA(const CMatrix& a) {
    const Powers p = index_powers(a);
    if (p.profile.r == 0) return CMatrix::zero(a.rows(), a.cols());
    const GaussianRational d = sum_principal_minors(p.a_k1, p.profile.r);
    return column_form(p.a_k1, p.profile.r, p.a_k1, d);
}

CMatrix proj_AAd(const CMatrix& a) {
    const Powers p = index_powers(a);
    if (p.profile.r == 0) return CMatrix::zero(a.rows(), a.cols());
    const GaussianRational d = sum_principal_minors(p.a_k1, p.profile.r);
    return row_form(p.a_k1, p.profile.r, p.a_k1, d);
}

CMatrix drazin_oracle(const CMatrix& a, OracleSide side, std::optional<std::size_t> power) {
    require_square(a, "drazin_oracle");
    const std::size_t n = a.rows();
    const std::size_t p = power.value_or(n);
    const CMatrix a_p = mat_pow(a, p);
    const CMatrix k_mat = -(a_p * a);

    // Faddeev-LeVerrier on K = -A^{p+1}: det(lambda I - K) = sum c_m lambda^m
    // and adj(lambda I - K) = sum_{s=1..n} lambda^{n-s} N_s.
    std::vector<GaussianRational> charpoly(n + 1);
    charpoly[n] = 1;
    std::vector<CMatrix> adj_terms;
    adj_terms.reserve(n);
    CMatrix prev = CMatrix::zero(n, n);
    for (std::size_t s = 1; s <= n; ++s) {
        CMatrix current = k_mat * prev;
        for (std::size_t d = 0; d < n; ++d) current(d, d) += charpoly[n - s + 1];
        const CMatrix kn = k_mat * current;
        GaussianRational trace;
        for (std::size_t d = 0; d < n; ++d) trace += kn(d, d);
        charpoly[n - s] = -trace / GaussianRational(static_cast<long>(s));
        adj_terms.push_back(current);
        prev = std::move(current);
    }
    const ScalarPolynomial denominator(charpoly);

    std::vector<CMatrix> numerators;
    numerators.reserve(n);
    for (const auto& term : adj_terms) numerators.push_back(side == OracleSide::left ? term * a_p : a_p * term);

    CMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<GaussianRational> coeffs(n);
            for (std::size_t s = 1; s <= n; ++s) coeffs[n - s] = numerators[s - 1](i, j);
            out(i, j) = poly_limit_at_zero(ScalarPolynomial(std::move(coeffs)), denominator);
        }
    }
    return out;
}

DrazinAxioms verify_drazin(const CMatrix& a, const CMatrix& x) {
    require_square(a, "verify_drazin");
    if (x.rows() != a.rows() || x.cols() != a.cols()) throw DimensionError("verify_drazin: X must match A's shape");
    const Powers p = index_powers(a);
    DrazinAxioms out;
    out.profile = p.profile;
    out.power_left = p.a_k1 * x == p.a_k;
    out.reflexive = x * a * x == x;
    out.commutes = a * x == x * a;
    out.power_right = x * p.a_k1 == p.a_k;
    return out;
}

} // namespace drazin
