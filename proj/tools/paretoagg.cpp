// Batch CLI: audit | solve | duality | seu | oracle over problem files or
// directories of them. Reports are JSON (or flattened CSV) on stdout.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paretoagg/errors.hpp"
#include "paretoagg/reports.hpp"

using namespace paretoagg;

int main(int argc, char** argv) {
    CLI::App app{"Pareto-gap audits and approximate utilitarian aggregation"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    ToolOptions opts;
    std::string path;
    std::string regime = "nonneg";
    std::string format = "json";
    double epsilon = -1.0;

    app.add_option("--feas-tol", opts.tol.feas_tol, "LP feasibility tolerance")
        ->capture_default_str();
    app.add_option("--opt-tol", opts.tol.opt_tol, "LP reduced-cost tolerance")
        ->capture_default_str();
    app.add_option("--verdict-tol", opts.tol.verdict_tol, "verdict tolerance added to epsilon")
        ->capture_default_str();
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    auto add_path = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("path", path, "problem file or directory");
        if (required) o->required();
    };
    auto add_epsilon = [&](CLI::App* sub) {
        sub->add_option("--epsilon", epsilon, "epsilon override (>= 0)");
    };

    auto* audit = app.add_subcommand("audit", "check the four epsilon-Pareto axioms");
    add_path(audit);
    add_epsilon(audit);

    auto* solve = app.add_subcommand("solve", "minimum-oscillation weights / positive margin");
    add_path(solve);
    add_epsilon(solve);
    solve->add_option("--regime", regime, "weight sign regime")
        ->check(CLI::IsMember({"nonneg", "free", "positive"}))
        ->capture_default_str();

    auto* duality = app.add_subcommand("duality", "gap/oscillation duality certificate");
    add_path(duality, /*required=*/false);
    duality->add_option("--random-batch", opts.random_batch,
                        "check N generated instances instead of a file (PARETO_AGG_SEED)");

    auto* seu = app.add_subcommand("seu", "taste/belief decomposition and likelihood floor");
    add_path(seu);

    auto* oracle = app.add_subcommand("oracle", "brute-force sandwich and exact recheck");
    add_path(oracle);
    add_epsilon(oracle);
    oracle->add_option("--grid-k", opts.grid.k, "lottery grid resolution")->capture_default_str();
    oracle->add_option("--weight-box", opts.grid.box, "weight grid box bound (0 = heuristic)")
        ->capture_default_str();
    oracle->add_option("--weight-step", opts.grid.step, "weight grid step")->capture_default_str();
    oracle->add_option("--widen", opts.grid.widen, "multiplier on the heuristic box")
        ->capture_default_str();
    oracle->add_flag("--exact", opts.exact, "also recheck in exact rational arithmetic");

    CLI11_PARSE(app, argc, argv);

    if (epsilon >= 0.0) opts.epsilon = epsilon;
    opts.format = format;
    if (regime == "free")
        opts.regime = SignRegime::free;
    else if (regime == "positive")
        opts.regime = SignRegime::positive;
    else
        opts.regime = SignRegime::nonneg;

    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "duality" && path.empty() && opts.random_batch <= 0) {
        std::cerr << "duality needs a path or --random-batch N\n";
        return exit_input_error;
    }

    try {
        const CmdResult r = run_command(command, path, opts);
        std::cout << render_report(r.report, opts.format);
        return r.exit_code;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inconsistent;
    }
}
