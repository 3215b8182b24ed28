#include "drazin/exactnum.hpp"

#include "drazin/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace drazin {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

// Unsigned "digits" or "digits/digits" starting at pos; advances pos.
Rational read_unsigned_rational(const std::string& s, std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (pos == start) throw ParseError("expected digits in \"" + s + "\"");
    mpz_class num(s.substr(start, pos - start));
    mpz_class den(1);
    if (pos < s.size() && s[pos] == '/') {
        const std::size_t dstart = ++pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (pos == dstart) throw ParseError("expected denominator in \"" + s + "\"");
        den = mpz_class(s.substr(dstart, pos - dstart));
        if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string s = strip_spaces(text);
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
    Rational q = read_unsigned_rational(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters in rational \"" + s + "\"");
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

GaussianRational GaussianRational::parse(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty scalar");
    Rational re(0), im(0);
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in \"" + s + "\"");
        }
        if (pos >= s.size()) throw ParseError("dangling sign in \"" + s + "\"");

        Rational magnitude(1);
        bool imaginary = false;
        if (s[pos] == 'i') {
            imaginary = true;
            ++pos;
        } else {
            magnitude = read_unsigned_rational(s, pos);
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                if (pos >= s.size() || s[pos] != 'i') throw ParseError("expected 'i' after '*' in \"" + s + "\"");
            }
            if (pos < s.size() && s[pos] == 'i') {
                imaginary = true;
                ++pos;
            }
        }
        if (negative) magnitude = -magnitude;
        (imaginary ? im : re) += magnitude;
    }
    return {re, im};
}

GaussianRational GaussianRational::reciprocal() const {
    if (is_zero()) throw DivisionByZero();
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const Rational n = o.norm();
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return drazin::to_string(re_);
    std::string imag;
    const Rational mag = abs(im_);
    imag = mag == 1 ? "i" : drazin::to_string(mag) + "*i";
    if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + imag : imag;
    return drazin::to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

ScalarPolynomial::ScalarPolynomial(std::vector<GaussianRational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

ScalarPolynomial ScalarPolynomial::constant(GaussianRational c) { return ScalarPolynomial({std::move(c)}); }

ScalarPolynomial ScalarPolynomial::monomial(GaussianRational c, std::size_t power) {
    std::vector<GaussianRational> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return ScalarPolynomial(std::move(coeffs));
}

void ScalarPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t ScalarPolynomial::order_at_zero() const {
    const auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return !c.is_zero(); });
    if (it == coeffs_.end()) throw DivisionByZero();
    return static_cast<std::size_t>(it - coeffs_.begin());
}

GaussianRational ScalarPolynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : GaussianRational{};
}

GaussianRational ScalarPolynomial::evaluate(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

ScalarPolynomial& ScalarPolynomial::operator+=(const ScalarPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t p = 0; p < o.coeffs_.size(); ++p) coeffs_[p] += o.coeffs_[p];
    trim();
    return *this;
}

ScalarPolynomial& ScalarPolynomial::operator-=(const ScalarPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t p = 0; p < o.coeffs_.size(); ++p) coeffs_[p] -= o.coeffs_[p];
    trim();
    return *this;
}

ScalarPolynomial& ScalarPolynomial::operator*=(const GaussianRational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t p = 0; p < a.coeffs_.size(); ++p) {
        if (a.coeffs_[p].is_zero()) continue;
        for (std::size_t q = 0; q < b.coeffs_.size(); ++q) out[p + q] += a.coeffs_[p] * b.coeffs_[q];
    }
    return ScalarPolynomial(std::move(out));
}

GaussianRational poly_limit_at_zero(const ScalarPolynomial& num, const ScalarPolynomial& den) {
    if (den.is_zero()) throw DivisionByZero();
    const std::size_t order = den.order_at_zero();
    if (num.is_zero()) return {};
    const std::size_t num_order = num.order_at_zero();
    if (num_order < order) throw LimitDiverges();
    if (num_order > order) return {};
    return num.coefficient(order) / den.coefficient(order);
}

} // namespace drazin
