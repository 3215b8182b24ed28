#pragma once

#include "drazin/drazin.hpp"
#include "drazin/matrix.hpp"
#include "drazin/ode.hpp"
#include "drazin/solvers.hpp"

#include <json.hpp>

#include <filesystem>

namespace drazin::io {

using nlohmann::json;

/*
 * Matrix wire format:
 *
 *   {"rows": n, "cols": m, "entries": [[re, im], ...]}
 *
 * `entries` is row-major with n*m pairs. On input each component is a JSON
 * integer or a "p/q" string; an entry may also be a bare integer or a full
 * scalar string such as "1/2-3*i". Output always writes pairs of strings.
 */
json scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const json& j);

json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);
CMatrix read_matrix_file(const std::filesystem::path& path);

/// {"variable": "t", "coefficients": [matrix, ...]}, constant term first.
json polynomial_to_json(const MatrixPolynomial& p);
MatrixPolynomial polynomial_from_json(const json& j);

json profile_to_json(const IndexProfile& p);

} // namespace drazin::io
