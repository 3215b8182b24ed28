#pragma once

#include "drazin/drazin.hpp"
#include "drazin/io.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace drazin::cli {

enum class Command { drazin, group, solve_ax, solve_xa, solve_axb, ode_left, ode_right, verify };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

enum class Emit { json, text };

/// Process exit codes; each failure class has its own.
enum ExitCode : int {
    ok = 0,
    internal_error = 1,
    usage_error = 2,
    parse_failure = 3,
    dimension_overflow = 4,
    index_too_large = 5,
    dimension_mismatch = 6,
    inconsistency = 7,
};

inline constexpr std::size_t kDefaultMaxDimension = 10;

/// Default guard, or DRAZIN_MAX_DIM when set to a positive integer.
std::size_t max_dimension_from_env();

struct JobSpec {
    Command command = Command::drazin;
    /// Matrix files keyed by role name: "A", "B", "D", "X".
    std::map<std::string, std::filesystem::path> inputs;
    std::size_t max_dimension = kDefaultMaxDimension;
    Emit emit = Emit::json;
    /// drazin / group only: "column", "row", "oracle" or "all".
    std::string method = "column";
};

struct RunResult {
    int exit_code = ExitCode::ok;
    io::json report;
};

/// Loads the inputs, runs the command and builds the report. Never throws;
/// failures come back as {"error": {"kind", "message"}} plus an exit code.
RunResult run(const JobSpec& job);

/// Same as run() but with matrices already in memory.
RunResult run(Command command, const std::map<std::string, CMatrix>& inputs, std::size_t max_dimension,
              const std::string& method = "column");

/// Human-readable rendering of a report.
std::string render_text(const io::json& report);

} // namespace drazin::cli
