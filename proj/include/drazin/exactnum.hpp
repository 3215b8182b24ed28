#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace drazin {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a reduced rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rational& q);

/*
 * Complex number with arbitrary-precision rational real and imaginary parts.
 *
 * Both parts are kept canonical (reduced, positive denominator) after every
 * operation, so equality is structural. The canonical text form is
 *
 *     "3"   "-1/12"   "i"   "-5/2*i"   "1/12+1/12*i"   "-1-i"
 *
 * and parse() also accepts any sum of real and imaginary terms written as
 * "a", "b*i" or "bi", e.g. "1/2 - 3i".
 */
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int value) : re_(value) {}
    GaussianRational(long value) : re_(value) {}
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational reciprocal() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/*
 * Univariate polynomial over the Gaussian rationals, coefficients stored
 * lowest degree first. Trailing zeros are always trimmed, so the zero
 * polynomial has no coefficients and degree() == -1.
 */
class ScalarPolynomial {
public:
    ScalarPolynomial() = default;
    explicit ScalarPolynomial(std::vector<GaussianRational> coefficients);
    ScalarPolynomial(std::initializer_list<GaussianRational> coefficients)
        : ScalarPolynomial(std::vector<GaussianRational>(coefficients)) {}

    static ScalarPolynomial constant(GaussianRational c);
    /// c * x^power
    static ScalarPolynomial monomial(GaussianRational c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Multiplicity of the root x = 0. Requires a nonzero polynomial.
    std::size_t order_at_zero() const;
    /// Coefficient of x^power (zero beyond the degree).
    GaussianRational coefficient(std::size_t power) const;
    const std::vector<GaussianRational>& coefficients() const { return coeffs_; }

    GaussianRational evaluate(const GaussianRational& x) const;

    ScalarPolynomial& operator+=(const ScalarPolynomial& o);
    ScalarPolynomial& operator-=(const ScalarPolynomial& o);
    ScalarPolynomial& operator*=(const GaussianRational& c);

    friend ScalarPolynomial operator+(ScalarPolynomial a, const ScalarPolynomial& b) { return a += b; }
    friend ScalarPolynomial operator-(ScalarPolynomial a, const ScalarPolynomial& b) { return a -= b; }
    friend ScalarPolynomial operator*(ScalarPolynomial a, const GaussianRational& c) { return a *= c; }
    friend ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b);

    friend bool operator==(const ScalarPolynomial& a, const ScalarPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();

    std::vector<GaussianRational> coeffs_;
};

/*
 * lim_{x->0} num(x) / den(x) for polynomials where num vanishes at zero to
 * at least the order of den. With o = ord(den):
 *   ord(num) == o  ->  num[o] / den[o]
 *   ord(num) >  o  ->  0           (the zero polynomial counts as infinite order)
 *   ord(num) <  o  ->  LimitDiverges
 * Throws DivisionByZero when den is the zero polynomial.
 */
GaussianRational poly_limit_at_zero(const ScalarPolynomial& num, const ScalarPolynomial& den);

} // namespace drazin
