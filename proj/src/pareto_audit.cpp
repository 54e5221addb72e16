#include "paretoagg/pareto_audit.hpp"

#include <algorithm>
#include <cmath>

#include "paretoagg/aggregation.hpp"
#include "paretoagg/lp.hpp"
#include "paretoagg/lp_formulations.hpp"

namespace paretoagg {

const char* to_string(Axiom a) {
    switch (a) {
        case Axiom::semistrong: return "semistrong";
        case Axiom::indifference: return "indifference";
        case Axiom::strong: return "strong";
        case Axiom::sequential_strong: return "sequential_strong";
    }
    return "unknown";
}

namespace {

std::vector<std::vector<double>> utility_matrix(const Problem& p) {
    std::vector<std::vector<double>> vs;
    vs.reserve(p.num_individuals());
    for (const auto& v : p.vs) vs.push_back(v.values);
    return vs;
}

SimplexOptions<double> lp_options(const Tolerances& tol) {
    SimplexOptions<double> o;
    o.feas_tol = tol.feas_tol;
    o.opt_tol = tol.opt_tol;
    return o;
}

// Lottery halves of a gap-LP solution; clip the LP's tiny negatives before
// the Lottery constructor renormalizes.
std::pair<Lottery, Lottery> split_pair(const std::vector<double>& z, std::size_t m) {
    std::vector<double> x(z.begin(), z.begin() + m), y(z.begin() + m, z.begin() + 2 * m);
    for (double& p : x) p = std::max(0.0, p);
    for (double& p : y) p = std::max(0.0, p);
    return {Lottery(std::move(x)), Lottery(std::move(y))};
}

GapResult run_gap(const Problem& problem, bool equality, const Tolerances& tol) {
    const std::size_t m = problem.num_prizes();
    const auto lp = lps::gap_lp<double>(problem.v0.values, utility_matrix(problem), equality);
    const auto sol = solve_lp(lp, lp_options(tol));
    if (sol.status != LpStatus::optimal)
        throw SolverError("gap LP did not solve to optimality; x = y is always feasible");

    auto [x, y] = split_pair(sol.z, m);
    GapResult out{std::max(0.0, -sol.objective),
                  ViolationCertificate{std::move(x), std::move(y), 0.0,
                                       equality ? Axiom::indifference : Axiom::semistrong},
                  sol.iterations};
    out.certificate.gap =
        evaluate(problem.v0, out.certificate.y) - evaluate(problem.v0, out.certificate.x);
    return out;
}

CheckResult gap_verdict(const Problem& problem, double eps, bool equality,
                        const Tolerances& tol) {
    if (!(eps >= 0.0)) throw InputError("epsilon must be >= 0");
    GapResult g = equality ? indifference_gap(problem, tol) : semistrong_gap(problem, tol);
    CheckResult out;
    out.axiom = equality ? Axiom::indifference : Axiom::semistrong;
    out.gap = g.gap;
    out.holds = g.gap <= eps + tol.verdict_tol;
    out.trivial_epsilon = eps >= oscillation(problem.v0);
    out.certificate = g.certificate;
    out.lp_iterations = g.lp_iterations;
    return out;
}

} // namespace

GapResult semistrong_gap(const Problem& problem, const Tolerances& tol) {
    return run_gap(problem, false, tol);
}

GapResult indifference_gap(const Problem& problem, const Tolerances& tol) {
    return run_gap(problem, true, tol);
}

CheckResult check_semistrong(const Problem& problem, double eps, const Tolerances& tol) {
    return gap_verdict(problem, eps, false, tol);
}

CheckResult check_indifference(const Problem& problem, double eps, const Tolerances& tol) {
    return gap_verdict(problem, eps, true, tol);
}

CheckResult check_strong(const Problem& problem, double eps, const Tolerances& tol) {
    CheckResult out = check_semistrong(problem, eps, tol);
    out.axiom = Axiom::strong;
    if (out.certificate) out.certificate->axiom = Axiom::strong;
    if (!out.holds) return out;

    // Given the semistrong pass, a strong violation needs a pair where the DM
    // loses at least eps while some individual strictly improves. Strictness
    // is not LP-expressible, so search per individual for the largest
    // improvement over that face.
    const std::size_t m = problem.num_prizes();
    const auto vs = utility_matrix(problem);
    out.strict_gap = 0.0;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const auto lp = lps::strict_improvement_lp<double>(problem.v0.values, vs, k, eps);
        const auto sol = solve_lp(lp, lp_options(tol));
        out.lp_iterations += sol.iterations;
        if (sol.status == LpStatus::infeasible) continue; // no pair loses eps: vacuous
        if (sol.status != LpStatus::optimal)
            throw SolverError("strict-improvement LP did not classify");
        const double improvement = -sol.objective;
        out.strict_gap = std::max(out.strict_gap, improvement);
        if (improvement > tol.verdict_tol) {
            out.holds = false;
            auto [x, y] = split_pair(sol.z, m);
            ViolationCertificate cert{std::move(x), std::move(y), 0.0, Axiom::strong};
            cert.gap = evaluate(problem.v0, cert.y) - evaluate(problem.v0, cert.x);
            out.certificate = std::move(cert);
        }
    }
    return out;
}

CheckResult check_sequential_strong(const Problem& problem, double eps, const Tolerances& tol) {
    // Finite prize simplices are polytopes, where the sequential axiom
    // coincides with plain strong Pareto; cross-validate against the
    // positive-weight margin.
    CheckResult out = check_strong(problem, eps, tol);
    out.axiom = Axiom::sequential_strong;
    if (out.certificate) out.certificate->axiom = Axiom::sequential_strong;
    const MarginResult margin = positive_weight_margin(problem, eps, tol);
    const bool margin_positive =
        margin.status == SolveStatus::optimal && margin.mu_star > 1e-9;
    out.cross_check_ok = (out.holds == margin_positive);
    out.lp_iterations += margin.lp_iterations;
    return out;
}

} // namespace paretoagg
