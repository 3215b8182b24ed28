#include "drazin/drazin.hpp"
#include "drazin/errors.hpp"
#include "drazin/ode.hpp"
#include "drazin/solvers.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace drazin;

namespace {

Rational component(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
    return parse_rational(py::str(h).cast<std::string>());
}

// int, Fraction, "p/q", "1/2-3*i" or a (re, im) pair.
GaussianRational scalar(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return GaussianRational::parse(h.cast<std::string>());
    if (py::isinstance<py::tuple>(h) || py::isinstance<py::list>(h)) {
        const py::sequence pair = py::reinterpret_borrow<py::sequence>(h);
        if (pair.size() != 2) throw ParseError("scalar pair must be (re, im)");
        return {component(pair[0]), component(pair[1])};
    }
    if (py::isinstance<py::float_>(h) || PyComplex_Check(h.ptr())) throw ParseError("inexact scalar; use int, str or Fraction");
    return {component(h), Rational(0)};
}

CMatrix to_matrix(const py::sequence& rows) {
    if (rows.size() == 0) throw DimensionError("matrix must have at least one row");
    const std::size_t n = rows.size();
    const std::size_t m = py::len(rows[0]);
    CMatrix out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const py::sequence row = rows[i].cast<py::sequence>();
        if (row.size() != m) throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < m; ++j) out(i, j) = scalar(row[j]);
    }
    return out;
}

std::vector<std::vector<std::string>> from_matrix(const CMatrix& a) {
    std::vector<std::vector<std::string>> out(a.rows(), std::vector<std::string>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).to_string();
    return out;
}

Method method_from(const std::string& name) {
    if (name == "column") return Method::column;
    if (name == "row") return Method::row;
    if (name == "oracle") return Method::oracle;
    throw py::value_error("method must be column, row or oracle");
}

py::dict inverse_dict(const DrazinResult& r) {
    py::dict d;
    d["inverse"] = from_matrix(r.inverse);
    d["k"] = r.profile.k;
    d["r"] = r.profile.r;
    d["denominator"] = r.denominator.to_string();
    d["method"] = std::string(to_string(r.method));
    return d;
}

py::dict solve_dict(const SolveReport& s) {
    py::dict d;
    d["X"] = from_matrix(s.X);
    d["restriction_satisfied"] = s.restriction_satisfied;
    d["profile_A"] = py::make_tuple(s.profile_a.k, s.profile_a.r);
    if (s.profile_b) d["profile_B"] = py::make_tuple(s.profile_b->k, s.profile_b->r);
    d["denominator"] = s.denominator.to_string();
    return d;
}

std::vector<std::vector<std::vector<std::string>>> coefficients(const MatrixPolynomial& p) {
    std::vector<std::vector<std::vector<std::string>>> out;
    for (const auto& c : p.coefficients()) out.push_back(from_matrix(c));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Drazin and group inverses over the Gaussian rationals";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IndexTooLarge>(m, "IndexTooLarge", PyExc_ValueError);
    py::register_exception<RepresentationMismatch>(m, "RepresentationMismatch", PyExc_ArithmeticError);

    m.def("index", [](const py::sequence& a) {
        const IndexProfile p = index_of(to_matrix(a));
        return py::make_tuple(p.k, p.r);
    }, py::arg("a"), "(k, r): index of A and rank of A^k.");

    m.def("drazin", [](const py::sequence& a, const std::string& method) {
        return inverse_dict(drazin_inverse(to_matrix(a), method_from(method)));
    }, py::arg("a"), py::arg("method") = "column");

    m.def("group", [](const py::sequence& a, const std::string& method) {
        return inverse_dict(group_inverse(to_matrix(a), method_from(method)));
    }, py::arg("a"), py::arg("method") = "column");

    m.def("solve_ax", [](const py::sequence& a, const py::sequence& b) {
        return solve_dict(solve_ax(to_matrix(a), to_matrix(b)));
    }, py::arg("a"), py::arg("b"));

    m.def("solve_xa", [](const py::sequence& a, const py::sequence& b) {
        return solve_dict(solve_xa(to_matrix(a), to_matrix(b)));
    }, py::arg("a"), py::arg("b"));

    m.def("solve_axb", [](const py::sequence& a, const py::sequence& b, const py::sequence& d) {
        return solve_dict(solve_axb(to_matrix(a), to_matrix(b), to_matrix(d)));
    }, py::arg("a"), py::arg("b"), py::arg("d"));

    m.def("ode_left", [](const py::sequence& a, const py::sequence& b) {
        return coefficients(ode_left_partial(to_matrix(a), to_matrix(b)));
    }, py::arg("a"), py::arg("b"), "Coefficients of X(t), constant term first.");

    m.def("ode_right", [](const py::sequence& a, const py::sequence& b) {
        return coefficients(ode_right_partial(to_matrix(a), to_matrix(b)));
    }, py::arg("a"), py::arg("b"), "Coefficients of X(t), constant term first.");

    m.def("verify", [](const py::sequence& a, const py::sequence& x) {
        const DrazinAxioms ax = verify_drazin(to_matrix(a), to_matrix(x));
        py::dict d;
        d["power_left"] = ax.power_left;
        d["reflexive"] = ax.reflexive;
        d["commutes"] = ax.commutes;
        d["power_right"] = ax.power_right;
        d["all"] = ax.all();
        return d;
    }, py::arg("a"), py::arg("x"));
}
