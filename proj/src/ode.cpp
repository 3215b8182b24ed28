#include "drazin/ode.hpp"

#include "drazin/drazin.hpp"
#include "drazin/errors.hpp"
#include "drazin/minors.hpp"

namespace drazin {

namespace {

// (-1)^{m-1} / m!
GaussianRational series_factor(std::size_t m) {
    mpz_class factorial(1);
    for (std::size_t s = 2; s <= m; ++s) factorial *= static_cast<unsigned long>(s);
    Rational q(mpz_class(m % 2 ? 1 : -1), factorial);
    q.canonicalize();
    return q;
}

struct Setup {
    IndexProfile profile;
    CMatrix a_k1;
    GaussianRational d;
};

Setup setup(const CMatrix& a) {
    const IndexProfile profile = index_of(a);
    CMatrix a_k1 = mat_pow(a, profile.k + 1);
    GaussianRational d = profile.r > 0 ? sum_principal_minors(a_k1, profile.r) : GaussianRational(1);
    return {profile, std::move(a_k1), std::move(d)};
}

} // namespace

MatrixPolynomial::MatrixPolynomial(std::vector<CMatrix> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw DimensionError("MatrixPolynomial needs at least one coefficient to fix its shape");
    rows_ = coeffs_.front().rows();
    cols_ = coeffs_.front().cols();
    for (const auto& c : coeffs_) {
        if (c.rows() != rows_ || c.cols() != cols_) throw DimensionError("coefficient shapes differ");
    }
    trim();
}

void MatrixPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CMatrix MatrixPolynomial::coefficient(std::size_t m) const {
    return m < coeffs_.size() ? coeffs_[m] : CMatrix::zero(rows_, cols_);
}

MatrixPolynomial MatrixPolynomial::derivative() const {
    MatrixPolynomial out(rows_, cols_);
    for (std::size_t m = 1; m < coeffs_.size(); ++m) out.coeffs_.push_back(coeffs_[m] * GaussianRational(static_cast<long>(m)));
    out.trim();
    return out;
}

CMatrix MatrixPolynomial::evaluate(const GaussianRational& t) const {
    CMatrix acc = CMatrix::zero(rows_, cols_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

MatrixPolynomial& MatrixPolynomial::operator+=(const MatrixPolynomial& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("MatrixPolynomial shapes differ");
    while (coeffs_.size() < o.coeffs_.size()) coeffs_.push_back(CMatrix::zero(rows_, cols_));
    for (std::size_t m = 0; m < o.coeffs_.size(); ++m) coeffs_[m] += o.coeffs_[m];
    trim();
    return *this;
}

MatrixPolynomial& MatrixPolynomial::operator-=(const MatrixPolynomial& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("MatrixPolynomial shapes differ");
    while (coeffs_.size() < o.coeffs_.size()) coeffs_.push_back(CMatrix::zero(rows_, cols_));
    for (std::size_t m = 0; m < o.coeffs_.size(); ++m) coeffs_[m] -= o.coeffs_[m];
    trim();
    return *this;
}

MatrixPolynomial operator*(const CMatrix& a, const MatrixPolynomial& p) {
    if (a.cols() != p.rows_) throw DimensionError("matrix times polynomial: shapes differ");
    MatrixPolynomial out(a.rows(), p.cols_);
    for (const auto& c : p.coeffs_) out.coeffs_.push_back(a * c);
    out.trim();
    return out;
}

MatrixPolynomial operator*(const MatrixPolynomial& p, const CMatrix& a) {
    if (p.cols_ != a.rows()) throw DimensionError("polynomial times matrix: shapes differ");
    MatrixPolynomial out(p.rows_, a.cols());
    for (const auto& c : p.coeffs_) out.coeffs_.push_back(c * a);
    out.trim();
    return out;
}

MatrixPolynomial MatrixPolynomial::transpose() const {
    MatrixPolynomial out(cols_, rows_);
    for (const auto& c : coeffs_) out.coeffs_.push_back(c.transpose());
    return out;
}

MatrixPolynomial ode_left_partial(const CMatrix& a, const CMatrix& b) {
    if (!a.is_square() || b.rows() != a.rows()) throw DimensionError("ode_left_partial: A must be n x n and B n x m");
    const Setup s = setup(a);
    const std::size_t n = a.rows();
    const std::size_t k = s.profile.k;

    // b_hat[l] = A^l B for l = 0..2k.
    std::vector<CMatrix> b_hat{b};
    for (std::size_t l = 1; l <= 2 * k; ++l) b_hat.push_back(a * b_hat.back());

    std::vector<ColumnMinorExpansion> expansions;
    if (s.profile.r > 0) {
        for (std::size_t i = 1; i <= n; ++i) expansions.emplace_back(s.a_k1, i, s.profile.r);
    }
    // A^D A^m B, entrywise from the columns of A^{k+m} B.
    auto drazin_times = [&](std::size_t m) {
        CMatrix out(n, b.cols());
        for (std::size_t i = 0; i < expansions.size(); ++i)
            for (std::size_t j = 1; j <= b.cols(); ++j) out(i, j - 1) = expansions[i].evaluate_column(b_hat[k + m], j) / s.d;
        return out;
    };

    std::vector<CMatrix> coeffs{drazin_times(0)};
    for (std::size_t m = 1; m <= k; ++m) coeffs.push_back((b_hat[m - 1] - drazin_times(m)) * series_factor(m));
    return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial ode_right_partial(const CMatrix& a, const CMatrix& b) {
    if (!a.is_square() || b.cols() != a.rows()) throw DimensionError("ode_right_partial: A must be n x n and B m x n");
    const Setup s = setup(a);
    const std::size_t n = a.rows();
    const std::size_t k = s.profile.k;

    // b_check[l] = B A^l for l = 0..2k.
    std::vector<CMatrix> b_check{b};
    for (std::size_t l = 1; l <= 2 * k; ++l) b_check.push_back(b_check.back() * a);

    std::vector<RowMinorExpansion> expansions;
    if (s.profile.r > 0) {
        for (std::size_t j = 1; j <= n; ++j) expansions.emplace_back(s.a_k1, j, s.profile.r);
    }
    // B A^m A^D, entrywise from the rows of B A^{k+m}.
    auto times_drazin = [&](std::size_t m) {
        CMatrix out(b.rows(), n);
        for (std::size_t j = 0; j < expansions.size(); ++j)
            for (std::size_t i = 1; i <= b.rows(); ++i) out(i - 1, j) = expansions[j].evaluate_row(b_check[k + m], i) / s.d;
        return out;
    };

    std::vector<CMatrix> coeffs{times_drazin(0)};
    for (std::size_t m = 1; m <= k; ++m) coeffs.push_back((b_check[m - 1] - times_drazin(m)) * series_factor(m));
    return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial residual_left(const CMatrix& a, const CMatrix& b, const MatrixPolynomial& x) {
    return x.derivative() + a * x - MatrixPolynomial({b});
}

MatrixPolynomial residual_right(const CMatrix& a, const CMatrix& b, const MatrixPolynomial& x) {
    return x.derivative() + x * a - MatrixPolynomial({b});
}

} // namespace drazin
