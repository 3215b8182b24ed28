#include "drazin/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using drazin::cli::Command;

int main(int argc, char** argv) {
    CLI::App app{"Exact determinantal Drazin inverses, restricted matrix equations and singular ODE solutions"};
    app.require_subcommand(1);

    drazin::cli::JobSpec job;
    job.max_dimension = drazin::cli::max_dimension_from_env();
    std::string emit = "json";
    std::map<std::string, std::string> paths;

    struct Entry {
        Command command;
        const char* help;
        std::vector<std::string> matrices;
        bool has_method;
    };
    const std::vector<Entry> entries{
        {Command::drazin, "Drazin inverse of A", {"A"}, true},
        {Command::group, "group inverse of A (index <= 1)", {"A"}, true},
        {Command::solve_ax, "Drazin-inverse solution of AX = B", {"A", "B"}, false},
        {Command::solve_xa, "Drazin-inverse solution of XA = B", {"A", "B"}, false},
        {Command::solve_axb, "Drazin-inverse solution of AXB = D", {"A", "B", "D"}, false},
        {Command::ode_left, "partial solution of X' + AX = B", {"A", "B"}, false},
        {Command::ode_right, "partial solution of X' + XA = B", {"A", "B"}, false},
        {Command::verify, "check X against the Drazin axioms for A", {"A", "X"}, false},
    };

    for (const auto& entry : entries) {
        auto* sub = app.add_subcommand(std::string(drazin::cli::command_name(entry.command)), entry.help);
        for (const auto& name : entry.matrices) {
            const std::string flags = name == "A" ? "--A,--input" : "--" + name;
            sub->add_option(flags, paths[name], "JSON file holding matrix " + name)->required()->check(CLI::ExistingFile);
        }
        if (entry.has_method) {
            sub->add_option("--method", job.method, "column, row, oracle or all")
                ->check(CLI::IsMember({"column", "row", "oracle", "all"}));
        }
        sub->add_option("--max-dimension", job.max_dimension, "largest accepted matrix dimension")
            ->check(CLI::PositiveNumber);
        sub->add_option("--emit", emit, "report format")->check(CLI::IsMember({"json", "text"}));
        sub->callback([&job, command = entry.command] { job.command = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : drazin::cli::ExitCode::usage_error;
    }

    for (const auto& [name, path] : paths) {
        if (!path.empty()) job.inputs[name] = path;
    }
    job.emit = emit == "text" ? drazin::cli::Emit::text : drazin::cli::Emit::json;

    const auto result = drazin::cli::run(job);
    if (job.emit == drazin::cli::Emit::text) {
        std::cout << drazin::cli::render_text(result.report);
    } else {
        std::cout << result.report.dump(2) << '\n';
    }
    if (result.exit_code != 0) std::cerr << "error: " << result.report["error"]["message"].get<std::string>() << '\n';
    return result.exit_code;
}
