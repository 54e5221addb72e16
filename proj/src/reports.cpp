#include "paretoagg/reports.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <sstream>
#include <thread>

#include "paretoagg/aggregation.hpp"
#include "paretoagg/pareto_audit.hpp"
#include "paretoagg/problem_io.hpp"
#include "paretoagg/random_instances.hpp"
#include "paretoagg/seu_pooling.hpp"

namespace paretoagg {

using nlohmann::json;

namespace {

std::uint64_t effective_seed(const ToolOptions& opts) {
    if (opts.seed != 0) return opts.seed;
    if (const char* env = std::getenv("PARETO_AGG_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw InputError("PARETO_AGG_SEED must be an unsigned integer");
    }
    return kDefaultSeed;
}

json envelope(const char* command, const ToolOptions& opts) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["tolerances"] = {{"feas_tol", opts.tol.feas_tol},
                       {"opt_tol", opts.tol.opt_tol},
                       {"verdict_tol", opts.tol.verdict_tol}};
    return j;
}

json certificate_json(const ViolationCertificate& c) {
    return json{{"x", c.x.probs}, {"y", c.y.probs}, {"gap", c.gap}, {"axiom", to_string(c.axiom)}};
}

json check_json(const CheckResult& c) {
    json j;
    j["verdict"] = c.holds ? "holds" : "fails";
    j["gap"] = c.gap;
    if (c.axiom == Axiom::strong || c.axiom == Axiom::sequential_strong)
        j["strict_gap"] = c.strict_gap;
    j["trivial_epsilon"] = c.trivial_epsilon;
    if (c.certificate) j["certificate"] = certificate_json(*c.certificate);
    if (c.cross_check_ok) j["cross_check_ok"] = *c.cross_check_ok;
    return j;
}

json weights_json(const Weights& w) {
    return json{{"a", w.a}, {"b", w.b}, {"regime", to_string(w.regime)}};
}

double require_epsilon(const ProblemFile& pf, const ToolOptions& opts, const std::string& path) {
    if (opts.epsilon) return *opts.epsilon;
    if (pf.epsilon) return *pf.epsilon;
    throw InputError(path + ": epsilon required (pass --epsilon or add an 'epsilon' field)");
}

// Independent reconstruction error: v0 vs sum a_i v_i + b + (e - b).
double reconstruction_error(const Problem& p, const Weights& w, const ResidualFunction& res) {
    double err = 0.0;
    for (std::size_t o = 0; o < p.num_prizes(); ++o) {
        double acc = w.b + (res.e[o] - w.b);
        for (std::size_t i = 0; i < w.a.size(); ++i) acc += w.a[i] * p.vs[i].values[o];
        err = std::max(err, std::fabs(p.v0.values[o] - acc));
    }
    return err;
}

json aggregation_json(const Problem& p, const AggregationResult& r) {
    json j;
    j["status"] = to_string(r.status);
    j["weights"] = weights_json(r.weights);
    j["oscillation"] = r.oscillation;
    j["sup_residual"] = r.sup_residual;
    j["residual_e"] = r.residual.e;
    j["reconstruction_error"] = reconstruction_error(p, r.weights, r.residual);
    return j;
}

CmdResult audit_one(const ProblemFile& pf, const ToolOptions& opts, const std::string& path) {
    const Problem p = to_problem(pf);
    const double eps = require_epsilon(pf, opts, path);

    json j;
    long iters = 0;
    const CheckResult ss = check_semistrong(p, eps, opts.tol);
    const CheckResult in = check_indifference(p, eps, opts.tol);
    const CheckResult st = check_strong(p, eps, opts.tol);
    const CheckResult sq = check_sequential_strong(p, eps, opts.tol);
    iters = ss.lp_iterations + in.lp_iterations + st.lp_iterations + sq.lp_iterations;
    j["epsilon"] = eps;
    j["semistrong"] = check_json(ss);
    j["indifference"] = check_json(in);
    j["strong"] = check_json(st);
    j["sequential"] = check_json(sq);
    j["lp_iterations"] = iters;
    const bool all_hold = ss.holds && in.holds && st.holds && sq.holds;
    return {std::move(j), all_hold ? exit_ok : exit_axiom_failed};
}

CmdResult solve_one(const ProblemFile& pf, const ToolOptions& opts, const std::string& path) {
    const Problem p = to_problem(pf);
    json j;
    j["regime"] = to_string(opts.regime);
    int code = exit_ok;
    if (opts.regime == SignRegime::positive) {
        const double eps = require_epsilon(pf, opts, path);
        const MarginResult m = positive_weight_margin(p, eps, opts.tol);
        j["epsilon"] = eps;
        j["status"] = to_string(m.status);
        j["mu_star"] = m.mu_star;
        j["trivial_epsilon"] = m.trivial_epsilon;
        j["lp_iterations"] = m.lp_iterations;
        if (m.weights) {
            j["weights"] = weights_json(*m.weights);
            const CenterResult c = center(m.weights->a, p, SignRegime::positive);
            j["sup_residual"] = c.sup_residual;
            j["oscillation"] = c.residual.omega;
            j["reconstruction_error"] = reconstruction_error(p, c.weights, c.residual);
        }
        if (m.status != SolveStatus::optimal) code = exit_axiom_failed;
    } else {
        const AggregationResult r = min_oscillation(p, opts.regime, opts.tol);
        j.update(aggregation_json(p, r));
        j["lp_iterations"] = r.lp_iterations;
        if (r.status != SolveStatus::optimal) code = exit_inconsistent;
    }
    return {std::move(j), code};
}

json duality_json(const DualityReport& r) {
    json j;
    j["delta_star"] = r.delta_star;
    j["omega_star"] = r.omega_star;
    j["gap_mismatch"] = r.gap_mismatch;
    j["consistent"] = r.consistent;
    j["weights"] = weights_json(r.weights);
    j["certificate"] = certificate_json(r.certificate);
    j["lp_iterations"] = r.lp_iterations;
    return j;
}

CmdResult duality_one(const ProblemFile& pf, const ToolOptions& opts, const std::string&) {
    const Problem p = to_problem(pf);
    const DualityReport r = duality_certificate(p, opts.tol);
    return {duality_json(r), r.consistent ? exit_ok : exit_inconsistent};
}

CmdResult seu_one(const ProblemFile& pf, const ToolOptions& opts, const std::string& path) {
    const SeuProblem sp = to_seu_problem(pf);
    const double eps1 = pf.seu->epsilon1;
    const double eps2 = pf.seu->epsilon2;

    json j;
    j["epsilon1"] = eps1;
    j["epsilon2"] = eps2;

    const TasteDecomposition taste = taste_decompose(sp, eps1, opts.tol);
    const Problem taste_problem(sp.consequences, sp.taste0, sp.tastes);
    json jt = aggregation_json(taste_problem, taste.agg);
    jt["verdict"] = taste.holds ? "holds" : "fails";
    j["taste"] = std::move(jt);

    const BeliefPool pool = belief_pool(sp.belief0, sp.beliefs, opts.tol);
    j["belief_pool"] = {{"lambda", pool.lambda},
                        {"residual", pool.residual.r},
                        {"tv_norm", pool.residual.tv_norm},
                        {"positive_part_mass", pool.positive_part_mass},
                        {"event_tv", event_tv(pool.residual)}};

    const FloorCheck floor = likelihood_floor_check(sp.belief0, sp.beliefs, eps2);
    std::vector<std::string> worst_labels;
    for (std::size_t s : floor.worst_event) worst_labels.push_back(sp.states[s]);
    j["likelihood_floor"] = {{"verdict", floor.holds ? "holds" : "fails"},
                             {"worst_slack", floor.worst_slack},
                             {"worst_event", worst_labels}};
    j["lp_iterations"] = taste.agg.lp_iterations + pool.lp_iterations;

    (void)path;
    const bool ok = taste.holds && floor.holds;
    return {std::move(j), ok ? exit_ok : exit_axiom_failed};
}

json sandwich_json(const SandwichReport& s, const GridSpec& g) {
    json j;
    j["grid_k"] = g.k;
    j["weight_step"] = g.step;
    j["weight_box"] = s.box_used;
    j["brute_gap"] = s.brute_gap;
    j["delta_star"] = s.delta_star;
    j["omega_star"] = s.omega_star;
    j["brute_min_oscillation"] = s.brute_min_oscillation;
    j["k_constant"] = s.k_constant;
    j["lower_ok"] = s.lower_ok;
    j["upper_ok"] = s.upper_ok;
    j["duality_ok"] = s.duality_ok;
    j["lp_iterations"] = s.lp_iterations;
    return j;
}

CmdResult oracle_one(const ProblemFile& pf, const ToolOptions& opts, const std::string&) {
    const Problem p = to_problem(pf);
    const SandwichReport s = oracle_sandwich(p, opts.grid, opts.tol);
    json j = sandwich_json(s, opts.grid);
    if (opts.exact) {
        const double eps = opts.epsilon ? *opts.epsilon : pf.epsilon.value_or(0.0);
        const ExactReport ex = exact_recheck(p, eps);
        j["exact"] = {{"epsilon", eps},
                      {"delta_star", rational_to_double(ex.delta_star)},
                      {"delta_ind", rational_to_double(ex.delta_ind)},
                      {"omega_nonneg", rational_to_double(ex.omega_nonneg)},
                      {"omega_free", rational_to_double(ex.omega_free)},
                      {"margin_feasible", ex.margin_feasible},
                      {"mu_star", rational_to_double(ex.mu_star)},
                      {"duality_equal", ex.duality_equal},
                      {"indifference_equal", ex.indifference_equal}};
        if (!ex.duality_equal || !ex.indifference_equal)
            return {std::move(j), exit_inconsistent};
    }
    const bool ok = s.lower_ok && s.upper_ok && s.duality_ok;
    return {std::move(j), ok ? exit_ok : exit_inconsistent};
}

CmdResult duality_batch(const ToolOptions& opts) {
    const std::uint64_t seed = effective_seed(opts);
    std::mt19937_64 rng(seed);
    json items = json::array();
    double max_mismatch = 0.0;
    bool all_ok = true;
    long iters = 0;
    for (int t = 0; t < opts.random_batch; ++t) {
        const Problem p = random_problem(rng);
        const DualityReport r = duality_certificate(p, opts.tol);
        max_mismatch = std::max(max_mismatch, r.gap_mismatch);
        all_ok = all_ok && r.consistent;
        iters += r.lp_iterations;
        items.push_back({{"instance", t},
                         {"m", p.num_prizes()},
                         {"n", p.num_individuals()},
                         {"delta_star", r.delta_star},
                         {"omega_star", r.omega_star},
                         {"gap_mismatch", r.gap_mismatch},
                         {"consistent", r.consistent}});
    }
    json j;
    j["seed"] = seed;
    j["count"] = opts.random_batch;
    j["max_gap_mismatch"] = max_mismatch;
    j["all_consistent"] = all_ok;
    j["lp_iterations"] = iters;
    j["instances"] = std::move(items);
    return {std::move(j), all_ok ? exit_ok : exit_inconsistent};
}

using OneFn = CmdResult (*)(const ProblemFile&, const ToolOptions&, const std::string&);

CmdResult run_one(OneFn fn, const char* command, const std::string& path,
                  const ToolOptions& opts) {
    json j = envelope(command, opts);
    try {
        const ProblemFile pf = load_problem_file(path);
        j["problem"] = problem_echo(pf);
        CmdResult r = fn(pf, opts, path);
        j["result"] = std::move(r.report);
        return {std::move(j), r.exit_code};
    } catch (const InputError& e) {
        j["error"] = e.what();
        return {std::move(j), exit_input_error};
    } catch (const SolverError& e) {
        j["error"] = e.what();
        return {std::move(j), exit_inconsistent};
    }
}

std::vector<std::string> batch_files(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext == ".json" || ext == ".csv") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError(dir + ": directory holds no .json or .csv problem files");
    return files;
}

CmdResult run_batch(OneFn fn, const char* command, const std::string& dir,
                    const ToolOptions& opts) {
    const std::vector<std::string> files = batch_files(dir);
    const std::size_t workers =
        std::min<std::size_t>(files.size(), std::max(1u, std::thread::hardware_concurrency()));

    std::vector<CmdResult> results(files.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1))
                results[i] = run_one(fn, command, files[i], opts);
        }));
    }
    for (auto& f : pool) f.get();

    json j = envelope(command, opts);
    json items = json::array();
    int code = exit_ok;
    for (std::size_t i = 0; i < files.size(); ++i) { // merged in filename order
        items.push_back({{"path", files[i]},
                         {"exit_code", results[i].exit_code},
                         {"report", std::move(results[i].report)}});
        code = std::max(code, results[i].exit_code);
    }
    j["files"] = std::move(items);
    return {std::move(j), code};
}

CmdResult dispatch(OneFn fn, const char* command, const std::string& path,
                   const ToolOptions& opts) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) return run_batch(fn, command, path, opts);
    return run_one(fn, command, path, opts);
}

} // namespace

CmdResult cmd_audit(const std::string& path, const ToolOptions& opts) {
    return dispatch(&audit_one, "audit", path, opts);
}
CmdResult cmd_solve(const std::string& path, const ToolOptions& opts) {
    return dispatch(&solve_one, "solve", path, opts);
}
CmdResult cmd_duality(const std::string& path, const ToolOptions& opts) {
    if (opts.random_batch > 0) {
        json j = envelope("duality", opts);
        CmdResult r = duality_batch(opts);
        j["result"] = std::move(r.report);
        return {std::move(j), r.exit_code};
    }
    return dispatch(&duality_one, "duality", path, opts);
}
CmdResult cmd_seu(const std::string& path, const ToolOptions& opts) {
    return dispatch(&seu_one, "seu", path, opts);
}
CmdResult cmd_oracle(const std::string& path, const ToolOptions& opts) {
    return dispatch(&oracle_one, "oracle", path, opts);
}

CmdResult run_command(const std::string& command, const std::string& path,
                      const ToolOptions& opts) {
    if (command == "audit") return cmd_audit(path, opts);
    if (command == "solve") return cmd_solve(path, opts);
    if (command == "duality") return cmd_duality(path, opts);
    if (command == "seu") return cmd_seu(path, opts);
    if (command == "oracle") return cmd_oracle(path, opts);
    throw InputError("unknown command: " + command);
}

namespace {

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out << prefix << "," << j.dump() << "\n";
    }
}

} // namespace

std::string render_report(const json& report, const std::string& format) {
    if (format == "csv") {
        std::ostringstream out;
        out << "key,value\n";
        flatten(report, "", out);
        return out.str();
    }
    return report.dump(2) + "\n";
}

} // namespace paretoagg
