#include "drazin/io.hpp"

#include "drazin/errors.hpp"

#include <fstream>
#include <string>

namespace drazin::io {

namespace {

Rational component_from_json(const json& j) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(mpz_class(std::to_string(j.get<std::uint64_t>())))
                                      : Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("scalar component must be an integer or a \"p/q\" string, got " + j.dump());
}

std::size_t dimension_from_json(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1) {
        throw ParseError(std::string("matrix field \"") + key + "\" must be a positive integer");
    }
    return j[key].get<std::size_t>();
}

} // namespace

json scalar_to_json(const GaussianRational& z) { return json::array({to_string(z.re()), to_string(z.im())}); }

GaussianRational scalar_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError("scalar pair must be [re, im], got " + j.dump());
        return {component_from_json(j[0]), component_from_json(j[1])};
    }
    if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
    if (j.is_number_integer()) return GaussianRational(component_from_json(j));
    throw ParseError("unsupported scalar " + j.dump());
}

json matrix_to_json(const CMatrix& m) {
    json entries = json::array();
    for (const auto& z : m.entries()) entries.push_back(scalar_to_json(z));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("matrix must be a JSON object");
    const std::size_t rows = dimension_from_json(j, "rows");
    const std::size_t cols = dimension_from_json(j, "cols");
    if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("matrix field \"entries\" must be an array");
    const json& entries = j["entries"];
    if (entries.size() != rows * cols) {
        throw ParseError("matrix declares " + std::to_string(rows) + "x" + std::to_string(cols) + " but has " +
                         std::to_string(entries.size()) + " entries");
    }
    std::vector<GaussianRational> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(scalar_from_json(e));
    return {rows, cols, std::move(values)};
}

CMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return matrix_from_json(j);
}

json polynomial_to_json(const MatrixPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(matrix_to_json(c));
    return {{"variable", "t"}, {"rows", p.rows()}, {"cols", p.cols()}, {"coefficients", std::move(coeffs)}};
}

MatrixPolynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array()) {
        throw ParseError("polynomial must be an object with a \"coefficients\" array");
    }
    std::vector<CMatrix> coeffs;
    for (const auto& c : j["coefficients"]) coeffs.push_back(matrix_from_json(c));
    if (coeffs.empty()) return {dimension_from_json(j, "rows"), dimension_from_json(j, "cols")};
    return MatrixPolynomial(std::move(coeffs));
}

json profile_to_json(const IndexProfile& p) { return {{"k", p.k}, {"r", p.r}}; }

} // namespace drazin::io
