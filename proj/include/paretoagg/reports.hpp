#pragma once

// Command layer behind the CLI: each cmd_* ingests a problem file (or a
// directory of them), runs the corresponding operations and returns a
// machine-readable report plus the process exit code.
//
// Exit codes: 0 success/holds, 1 an audited axiom fails, 2 input error,
// 3 internal-consistency failure (duality mismatch or sandwich violation).

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "paretoagg/core_types.hpp"
#include "paretoagg/oracle.hpp"

namespace paretoagg {

inline constexpr const char* kToolName = "paretoagg";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
    exit_ok = 0,
    exit_axiom_failed = 1,
    exit_input_error = 2,
    exit_inconsistent = 3,
};

struct ToolOptions {
    Tolerances tol;
    std::optional<double> epsilon;  // overrides the file's epsilon
    SignRegime regime = SignRegime::nonneg;
    GridSpec grid;
    bool exact = false;
    std::string format = "json";    // json | csv
    int random_batch = 0;           // duality: number of generated instances
    std::uint64_t seed = 0;         // 0 = PARETO_AGG_SEED or default
};

struct CmdResult {
    nlohmann::json report;
    int exit_code = exit_ok;
};

CmdResult cmd_audit(const std::string& path, const ToolOptions& opts);
CmdResult cmd_solve(const std::string& path, const ToolOptions& opts);
CmdResult cmd_duality(const std::string& path, const ToolOptions& opts);
CmdResult cmd_seu(const std::string& path, const ToolOptions& opts);
CmdResult cmd_oracle(const std::string& path, const ToolOptions& opts);

// Dispatch by name; a directory path fans out over *.json/*.csv in filename
// order (processed in parallel, merged deterministically).
CmdResult run_command(const std::string& command, const std::string& path,
                      const ToolOptions& opts);

// Report rendering per --format.
std::string render_report(const nlohmann::json& report, const std::string& format);

} // namespace paretoagg
