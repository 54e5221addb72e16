#pragma once

// Problem-file ingestion (JSON, plus a CSV convenience importer) and the
// echo serialization embedded in reports.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "paretoagg/core_types.hpp"
#include "paretoagg/seu_pooling.hpp"

namespace paretoagg {

struct SeuSection {
    std::vector<std::string> states;
    std::optional<std::vector<double>> taste_dm;               // defaults to top-level dm
    std::optional<std::vector<std::vector<double>>> taste_ind; // defaults to top-level individuals
    std::vector<double> belief_dm;
    std::vector<std::vector<double>> belief_ind;
    double epsilon1 = 0.0;
    double epsilon2 = 0.0;
};

struct ProblemFile {
    std::vector<std::string> prizes;
    std::vector<double> dm;
    std::vector<std::vector<double>> individuals;
    std::optional<double> epsilon;
    std::optional<SeuSection> seu;
};

// Dispatches on extension: .csv goes through the convenience importer
// (header row = prize labels, first data row = DM), anything else is JSON.
ProblemFile load_problem_file(const std::string& path);

ProblemFile parse_problem_json(const nlohmann::json& j, const std::string& context);
ProblemFile parse_problem_csv(const std::string& text, const std::string& context);

nlohmann::json problem_echo(const ProblemFile& pf);

Problem to_problem(const ProblemFile& pf);
SeuProblem to_seu_problem(const ProblemFile& pf);

} // namespace paretoagg
