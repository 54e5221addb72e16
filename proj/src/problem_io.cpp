#include "paretoagg/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace paretoagg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& what) {
    throw InputError(context + ": " + what);
}

double number_at(const json& j, const std::string& context, const std::string& field) {
    if (!j.is_number()) fail(context, "field '" + field + "' must be a finite number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(context, "field '" + field + "' must be a finite number");
    return v;
}

std::vector<double> vector_at(const json& j, const std::string& context,
                              const std::string& field) {
    if (!j.is_array() || j.empty()) fail(context, "field '" + field + "' must be a non-empty array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(number_at(e, context, field));
    return out;
}

std::vector<std::vector<double>> matrix_at(const json& j, const std::string& context,
                                           const std::string& field) {
    if (!j.is_array() || j.empty()) fail(context, "field '" + field + "' must be a non-empty array of arrays");
    std::vector<std::vector<double>> out;
    out.reserve(j.size());
    for (const auto& row : j) out.push_back(vector_at(row, context, field));
    return out;
}

SeuSection parse_seu(const json& j, const std::string& context) {
    SeuSection s;
    if (!j.is_object()) fail(context, "field 'seu' must be an object");
    if (!j.contains("states")) fail(context, "seu section needs 'states'");
    for (const auto& e : j.at("states")) {
        if (!e.is_string()) fail(context, "seu 'states' must be strings");
        s.states.push_back(e.get<std::string>());
    }
    if (j.contains("tastes")) {
        const auto& t = j.at("tastes");
        if (!t.is_object()) fail(context, "seu 'tastes' must be an object");
        if (t.contains("dm")) s.taste_dm = vector_at(t.at("dm"), context, "seu.tastes.dm");
        if (t.contains("individuals"))
            s.taste_ind = matrix_at(t.at("individuals"), context, "seu.tastes.individuals");
    }
    if (!j.contains("beliefs")) fail(context, "seu section needs 'beliefs'");
    const auto& b = j.at("beliefs");
    if (!b.is_object() || !b.contains("dm") || !b.contains("individuals"))
        fail(context, "seu 'beliefs' needs 'dm' and 'individuals'");
    s.belief_dm = vector_at(b.at("dm"), context, "seu.beliefs.dm");
    s.belief_ind = matrix_at(b.at("individuals"), context, "seu.beliefs.individuals");
    if (j.contains("epsilon1")) s.epsilon1 = number_at(j.at("epsilon1"), context, "seu.epsilon1");
    if (j.contains("epsilon2")) s.epsilon2 = number_at(j.at("epsilon2"), context, "seu.epsilon2");
    if (s.epsilon1 < 0) fail(context, "seu.epsilon1 must be >= 0");
    if (s.epsilon2 < 0 || s.epsilon2 > 1) fail(context, "seu.epsilon2 must lie in [0, 1]");
    return s;
}

} // namespace

ProblemFile parse_problem_json(const json& j, const std::string& context) {
    if (!j.is_object()) fail(context, "top level must be a JSON object");
    for (const auto& key : {"prizes", "dm", "individuals"})
        if (!j.contains(key)) fail(context, std::string("missing required field '") + key + "'");

    ProblemFile pf;
    for (const auto& e : j.at("prizes")) {
        if (!e.is_string()) fail(context, "'prizes' must be strings");
        pf.prizes.push_back(e.get<std::string>());
    }
    pf.dm = vector_at(j.at("dm"), context, "dm");
    pf.individuals = matrix_at(j.at("individuals"), context, "individuals");

    const std::size_t m = pf.prizes.size();
    if (pf.dm.size() != m)
        fail(context, "'dm' has " + std::to_string(pf.dm.size()) + " entries but there are " +
                          std::to_string(m) + " prizes");
    for (std::size_t i = 0; i < pf.individuals.size(); ++i)
        if (pf.individuals[i].size() != m)
            fail(context, "individual " + std::to_string(i) + " has " +
                              std::to_string(pf.individuals[i].size()) + " entries but there are " +
                              std::to_string(m) + " prizes");

    if (j.contains("epsilon")) {
        pf.epsilon = number_at(j.at("epsilon"), context, "epsilon");
        if (*pf.epsilon < 0) fail(context, "'epsilon' must be >= 0");
    }
    if (j.contains("seu")) {
        pf.seu = parse_seu(j.at("seu"), context);
        const auto& s = *pf.seu;
        const std::size_t n = pf.individuals.size();
        if (s.taste_dm && s.taste_dm->size() != m) fail(context, "seu.tastes.dm length mismatch");
        if (s.taste_ind) {
            if (s.taste_ind->size() != n) fail(context, "seu.tastes.individuals count mismatch");
            for (const auto& v : *s.taste_ind)
                if (v.size() != m) fail(context, "seu.tastes.individuals length mismatch");
        }
        if (s.belief_dm.size() != s.states.size()) fail(context, "seu.beliefs.dm length mismatch");
        if (s.belief_ind.size() != n) fail(context, "seu.beliefs.individuals count mismatch");
        for (const auto& b : s.belief_ind)
            if (b.size() != s.states.size()) fail(context, "seu.beliefs.individuals length mismatch");
    }
    return pf;
}

ProblemFile parse_problem_csv(const std::string& text, const std::string& context) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    if (rows.size() < 3) fail(context, "csv needs a header row, a DM row and at least one individual row");

    ProblemFile pf;
    pf.prizes = rows[0];
    const std::size_t m = pf.prizes.size();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != m)
            fail(context, "csv row " + std::to_string(r + 1) + " has " +
                              std::to_string(rows[r].size()) + " cells but the header has " +
                              std::to_string(m));
        std::vector<double> vals;
        vals.reserve(m);
        for (const auto& cell : rows[r]) {
            try {
                std::size_t used = 0;
                const double v = std::stod(cell, &used);
                if (used != cell.size() || !std::isfinite(v)) throw std::invalid_argument(cell);
                vals.push_back(v);
            } catch (const std::exception&) {
                fail(context, "csv row " + std::to_string(r + 1) + ": '" + cell + "' is not a number");
            }
        }
        if (r == 1)
            pf.dm = std::move(vals);
        else
            pf.individuals.push_back(std::move(vals));
    }
    return pf;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        return parse_problem_csv(buf.str(), path);
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse_problem_json(j, path);
}

json problem_echo(const ProblemFile& pf) {
    json j;
    j["prizes"] = pf.prizes;
    j["dm"] = pf.dm;
    j["individuals"] = pf.individuals;
    if (pf.epsilon) j["epsilon"] = *pf.epsilon;
    if (pf.seu) {
        const auto& s = *pf.seu;
        json js;
        js["states"] = s.states;
        if (s.taste_dm || s.taste_ind) {
            json t;
            if (s.taste_dm) t["dm"] = *s.taste_dm;
            if (s.taste_ind) t["individuals"] = *s.taste_ind;
            js["tastes"] = t;
        }
        js["beliefs"] = {{"dm", s.belief_dm}, {"individuals", s.belief_ind}};
        js["epsilon1"] = s.epsilon1;
        js["epsilon2"] = s.epsilon2;
        j["seu"] = js;
    }
    return j;
}

Problem to_problem(const ProblemFile& pf) {
    std::vector<UtilityVector> vs;
    vs.reserve(pf.individuals.size());
    for (const auto& v : pf.individuals) vs.emplace_back(v);
    return Problem(PrizeSpace(pf.prizes), UtilityVector(pf.dm), std::move(vs));
}

SeuProblem to_seu_problem(const ProblemFile& pf) {
    if (!pf.seu) throw InputError("problem file has no 'seu' section");
    const auto& s = *pf.seu;
    const auto& taste_dm = s.taste_dm ? *s.taste_dm : pf.dm;
    const auto& taste_ind = s.taste_ind ? *s.taste_ind : pf.individuals;
    std::vector<UtilityVector> tastes;
    tastes.reserve(taste_ind.size());
    for (const auto& v : taste_ind) tastes.emplace_back(v);
    std::vector<Belief> beliefs;
    beliefs.reserve(s.belief_ind.size());
    for (const auto& b : s.belief_ind) beliefs.emplace_back(b);
    return SeuProblem(PrizeSpace(pf.prizes), s.states, UtilityVector(taste_dm), std::move(tastes),
                      Belief(s.belief_dm), std::move(beliefs));
}

} // namespace paretoagg
