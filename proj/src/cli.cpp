#include "drazin/cli.hpp"

#include "drazin/errors.hpp"
#include "drazin/ode.hpp"
#include "drazin/solvers.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <utility>
#include <vector>

namespace drazin::cli {

namespace {

using io::json;

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommands{{
    {Command::drazin, "drazin"},
    {Command::group, "group"},
    {Command::solve_ax, "solve-ax"},
    {Command::solve_xa, "solve-xa"},
    {Command::solve_axb, "solve-axb"},
    {Command::ode_left, "ode-left"},
    {Command::ode_right, "ode-right"},
    {Command::verify, "verify"},
}};

class DimensionOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> required_inputs(Command command) {
    switch (command) {
    case Command::drazin:
    case Command::group: return {"A"};
    case Command::solve_ax:
    case Command::solve_xa:
    case Command::ode_left:
    case Command::ode_right: return {"A", "B"};
    case Command::solve_axb: return {"A", "B", "D"};
    case Command::verify: return {"A", "X"};
    }
    return {};
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "column") return Method::column;
    if (name == "row") return Method::row;
    if (name == "oracle") return Method::oracle;
    return std::nullopt;
}

json inverse_report(const CMatrix& a, const std::string& method, bool group) {
    if (group && index_of(a).k > 1) throw IndexTooLarge();
    json report;
    if (method == "all") {
        const DrazinResult col = drazin_col(a);
        const DrazinResult row = drazin_row(a);
        const CMatrix oracle = drazin_oracle(a);
        report["method"] = "all";
        report["result"] = io::matrix_to_json(col.inverse);
        report["profile"] = io::profile_to_json(col.profile);
        report["denominator"] = col.denominator.to_string();
        report["results"] = {{"column", io::matrix_to_json(col.inverse)},
                             {"row", io::matrix_to_json(row.inverse)},
                             {"oracle", io::matrix_to_json(oracle)}};
        report["agreement"] = col.inverse == row.inverse && row.inverse == oracle;
        return report;
    }
    const auto m = parse_method(method);
    if (!m) throw UsageError("unknown method \"" + method + "\" (expected column, row, oracle or all)");
    const DrazinResult result = drazin_inverse(a, *m);
    report["method"] = std::string(to_string(result.method));
    report["result"] = io::matrix_to_json(result.inverse);
    report["profile"] = io::profile_to_json(result.profile);
    report["denominator"] = result.denominator.to_string();
    return report;
}

json solve_report(const SolveReport& s) {
    json report;
    report["result"] = io::matrix_to_json(s.X);
    report["restriction_satisfied"] = s.restriction_satisfied;
    report["profile_A"] = io::profile_to_json(s.profile_a);
    if (s.profile_b) report["profile_B"] = io::profile_to_json(*s.profile_b);
    report["denominator"] = s.denominator.to_string();
    if (s.d_tilde) report["d_tilde"] = io::matrix_to_json(*s.d_tilde);
    if (s.dB_columns) {
        json cols = json::array();
        for (const auto& c : *s.dB_columns) cols.push_back(io::matrix_to_json(c));
        report["dB_columns"] = std::move(cols);
    }
    if (s.dA_rows) {
        json rows = json::array();
        for (const auto& r : *s.dA_rows) rows.push_back(io::matrix_to_json(r));
        report["dA_rows"] = std::move(rows);
    }
    return report;
}

json execute(Command command, const std::map<std::string, CMatrix>& in, const std::string& method) {
    const CMatrix& a = in.at("A");
    switch (command) {
    case Command::drazin: return inverse_report(a, method, false);
    case Command::group: return inverse_report(a, method, true);
    case Command::solve_ax: return solve_report(solve_ax(a, in.at("B")));
    case Command::solve_xa: return solve_report(solve_xa(a, in.at("B")));
    case Command::solve_axb: {
        const CMatrix& b = in.at("B");
        json report = solve_report(solve_axb(a, b, in.at("D")));
        report["denominators"] = {
            {"A", drazin_denominator(a, index_of(a)).to_string()},
            {"B", drazin_denominator(b, index_of(b)).to_string()},
        };
        return report;
    }
    case Command::ode_left:
    case Command::ode_right: {
        const CMatrix& b = in.at("B");
        const bool left = command == Command::ode_left;
        const MatrixPolynomial x = left ? ode_left_partial(a, b) : ode_right_partial(a, b);
        const MatrixPolynomial residual = left ? residual_left(a, b, x) : residual_right(a, b, x);
        const IndexProfile profile = index_of(a);
        json report;
        report["result"] = io::polynomial_to_json(x);
        report["profile"] = io::profile_to_json(profile);
        report["denominator"] = drazin_denominator(a, profile).to_string();
        report["residual_zero"] = residual.is_zero();
        return report;
    }
    case Command::verify: {
        const DrazinAxioms axioms = verify_drazin(a, in.at("X"));
        json report;
        report["profile"] = io::profile_to_json(axioms.profile);
        report["axioms"] = {
            {"power_left", axioms.power_left},
            {"reflexive", axioms.reflexive},
            {"commutes", axioms.commutes},
            {"power_right", axioms.power_right},
        };
        report["all"] = axioms.all();
        return report;
    }
    }
    throw UsageError("unknown command");
}

RunResult failure(Command command, int code, const char* kind, const std::string& message) {
    RunResult r;
    r.exit_code = code;
    r.report = {{"command", std::string(command_name(command))},
                {"status", "error"},
                {"error", {{"kind", kind}, {"message", message}}}};
    return r;
}

template <typename Body>
RunResult guarded(Command command, Body&& body) {
    try {
        RunResult r;
        r.report = body();
        r.report["command"] = std::string(command_name(command));
        r.report["status"] = "ok";
        return r;
    } catch (const UsageError& e) {
        return failure(command, ExitCode::usage_error, "usage", e.what());
    } catch (const ParseError& e) {
        return failure(command, ExitCode::parse_failure, "parse", e.what());
    } catch (const DimensionOverflow& e) {
        return failure(command, ExitCode::dimension_overflow, "dimension_overflow", e.what());
    } catch (const IndexTooLarge& e) {
        return failure(command, ExitCode::index_too_large, "index_too_large", e.what());
    } catch (const DimensionError& e) {
        return failure(command, ExitCode::dimension_mismatch, "dimension_mismatch", e.what());
    } catch (const RepresentationMismatch& e) {
        return failure(command, ExitCode::inconsistency, "inconsistency", e.what());
    } catch (const LimitDiverges& e) {
        return failure(command, ExitCode::inconsistency, "inconsistency", e.what());
    } catch (const std::exception& e) {
        return failure(command, ExitCode::internal_error, "internal", e.what());
    }
}

void check_inputs(Command command, const std::map<std::string, CMatrix>& inputs, std::size_t max_dimension) {
    for (const auto& name : required_inputs(command)) {
        const auto it = inputs.find(name);
        if (it == inputs.end()) throw UsageError("command " + std::string(command_name(command)) + " requires matrix " + name);
        const CMatrix& m = it->second;
        if (m.rows() > max_dimension || m.cols() > max_dimension) {
            throw DimensionOverflow("matrix " + name + " is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ", exceeding the maximum dimension " +
                                    std::to_string(max_dimension));
        }
    }
}

void render_value(std::ostringstream& os, const json& value, const std::string& indent);

void render_matrix(std::ostringstream& os, const json& m, const std::string& indent) {
    const std::size_t rows = m["rows"].get<std::size_t>();
    const std::size_t cols = m["cols"].get<std::size_t>();
    for (std::size_t r = 0; r < rows; ++r) {
        os << indent << "[";
        for (std::size_t c = 0; c < cols; ++c) {
            const auto z = io::scalar_from_json(m["entries"][r * cols + c]);
            os << (c ? ", " : " ") << z.to_string();
        }
        os << " ]\n";
    }
}

bool is_matrix(const json& v) { return v.is_object() && v.contains("entries") && v.contains("rows"); }

void render_value(std::ostringstream& os, const json& value, const std::string& indent) {
    if (is_matrix(value)) {
        os << "\n";
        render_matrix(os, value, indent + "  ");
    } else if (value.is_object() && value.contains("coefficients")) {
        os << "\n";
        std::size_t power = 0;
        for (const auto& c : value["coefficients"]) {
            os << indent << "  t^" << power++ << ":\n";
            render_matrix(os, c, indent + "    ");
        }
        if (power == 0) os << indent << "  0\n";
    } else if (value.is_object()) {
        os << "\n";
        for (const auto& [key, v] : value.items()) {
            os << indent << "  " << key << ":";
            render_value(os, v, indent + "  ");
        }
    } else if (value.is_array()) {
        os << "\n";
        for (std::size_t p = 0; p < value.size(); ++p) {
            os << indent << "  [" << p + 1 << "]:";
            render_value(os, value[p], indent + "  ");
        }
    } else if (value.is_string()) {
        os << " " << value.get<std::string>() << "\n";
    } else {
        os << " " << value.dump() << "\n";
    }
}

} // namespace

std::optional<Command> parse_command(std::string_view name) {
    for (const auto& [command, text] : kCommands) {
        if (text == name) return command;
    }
    return std::nullopt;
}

std::string_view command_name(Command command) {
    for (const auto& [c, text] : kCommands) {
        if (c == command) return text;
    }
    return "unknown";
}

std::size_t max_dimension_from_env() {
    const char* value = std::getenv("DRAZIN_MAX_DIM");
    if (value == nullptr) return kDefaultMaxDimension;
    char* end = nullptr;
    const long parsed = std::strtol(value, &end, 10);
    if (end == value || *end != '\0' || parsed < 1) return kDefaultMaxDimension;
    return static_cast<std::size_t>(parsed);
}

RunResult run(Command command, const std::map<std::string, CMatrix>& inputs, std::size_t max_dimension,
              const std::string& method) {
    return guarded(command, [&] {
        check_inputs(command, inputs, max_dimension);
        return execute(command, inputs, method);
    });
}

RunResult run(const JobSpec& job) {
    std::map<std::string, CMatrix> matrices;
    RunResult loaded = guarded(job.command, [&] {
        for (const auto& name : required_inputs(job.command)) {
            const auto it = job.inputs.find(name);
            if (it == job.inputs.end()) {
                throw UsageError("command " + std::string(command_name(job.command)) + " requires --" + name);
            }
            matrices.emplace(name, io::read_matrix_file(it->second));
        }
        return json::object();
    });
    if (loaded.exit_code != ExitCode::ok) return loaded;
    return run(job.command, matrices, job.max_dimension, job.method);
}

std::string render_text(const json& report) {
    std::ostringstream os;
    for (const auto& [key, value] : report.items()) {
        os << key << ":";
        render_value(os, value, "");
    }
    return os.str();
}

} // namespace drazin::cli
