#include "paretoagg/aggregation.hpp"

#include <algorithm>
#include <cmath>

#include "paretoagg/lp.hpp"
#include "paretoagg/lp_formulations.hpp"

namespace paretoagg {

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

SolveStatus to_solve_status(LpStatus s) {
    switch (s) {
        case LpStatus::optimal: return SolveStatus::optimal;
        case LpStatus::infeasible: return SolveStatus::infeasible;
        case LpStatus::unbounded: return SolveStatus::unbounded;
        case LpStatus::breakdown: break;
    }
    throw SolverError("simplex reported numeric breakdown");
}

bool all_constant(const Problem& p) {
    for (const auto& v : p.vs)
        if (oscillation(v) > 0.0) return false;
    return true;
}

} // namespace

CenterResult center(const std::vector<double>& a, const Problem& problem, SignRegime regime) {
    const std::size_t n = problem.num_individuals();
    const std::size_t m = problem.num_prizes();
    if (a.size() != n) throw InputError("weight vector length does not match individual count");

    CenterResult out;
    out.residual.e.assign(m, 0.0);
    for (std::size_t o = 0; o < m; ++o) {
        double e = problem.v0.values[o];
        for (std::size_t i = 0; i < n; ++i) e -= a[i] * problem.vs[i].values[o];
        out.residual.e[o] = e;
    }
    const auto [lo, hi] = std::minmax_element(out.residual.e.begin(), out.residual.e.end());
    out.residual.omega = *hi - *lo;
    out.weights.a = a;
    out.weights.b = (*hi + *lo) / 2.0;
    out.weights.regime = regime;
    out.sup_residual = 0.0;
    for (double e : out.residual.e)
        out.sup_residual = std::max(out.sup_residual, std::fabs(e - out.weights.b));
    validate(out.weights);
    return out;
}

AggregationResult min_oscillation(const Problem& problem, SignRegime regime,
                                  const Tolerances& tol) {
    if (regime == SignRegime::positive)
        throw InputError("min_oscillation takes regime nonneg or free; use positive_weight_margin");

    AggregationResult out;
    const std::size_t n = problem.num_individuals();

    // All-constant profiles leave the objective independent of a; pin a = 0
    // so the result is the DM utility's own oscillation.
    if (all_constant(problem)) {
        CenterResult c = center(std::vector<double>(n, 0.0), problem, regime);
        out.weights = c.weights;
        out.residual = c.residual;
        out.oscillation = c.residual.omega;
        out.sup_residual = c.sup_residual;
        out.status = SolveStatus::optimal;
        return out;
    }

    const auto lp =
        lps::min_oscillation_lp<double>(problem.v0.values, utility_matrix(problem),
                                        regime == SignRegime::nonneg);
    const auto sol = solve_lp(lp, lp_options(tol));
    out.status = to_solve_status(sol.status);
    out.lp_iterations = sol.iterations;
    if (out.status != SolveStatus::optimal) return out; // not reachable: always feasible, bounded

    std::vector<double> a(sol.z.begin(), sol.z.begin() + n);
    if (regime == SignRegime::nonneg)
        for (double& ai : a) ai = std::max(0.0, ai);
    CenterResult c = center(a, problem, regime);
    out.weights = c.weights;
    out.residual = c.residual;
    out.oscillation = std::max(0.0, sol.objective);
    out.sup_residual = c.sup_residual;
    return out;
}

MarginResult positive_weight_margin(const Problem& problem, double eps, const Tolerances& tol) {
    if (!(eps >= 0.0)) throw InputError("epsilon must be >= 0");

    MarginResult out;
    out.trivial_epsilon = eps >= oscillation(problem.v0);
    const std::size_t n = problem.num_individuals();

    const auto lp = lps::margin_lp<double>(problem.v0.values, utility_matrix(problem), eps);
    const auto sol = solve_lp(lp, lp_options(tol));
    out.status = to_solve_status(sol.status);
    out.lp_iterations = sol.iterations;
    if (out.status != SolveStatus::optimal) return out;

    out.mu_star = -sol.objective;
    if (out.mu_star > 1e-9) {
        std::vector<double> a(sol.z.begin(), sol.z.begin() + n);
        for (double& ai : a) ai = std::max(ai, out.mu_star); // absorb ratio-test noise
        Weights w = center(a, problem, SignRegime::positive).weights;
        out.weights = std::move(w);
    }
    return out;
}

DualityReport duality_certificate(const Problem& problem, const Tolerances& tol) {
    DualityReport out;
    GapResult gap = semistrong_gap(problem, tol);
    AggregationResult agg = min_oscillation(problem, SignRegime::nonneg, tol);
    out.delta_star = gap.gap;
    out.omega_star = agg.oscillation;
    out.weights = agg.weights;
    out.certificate = gap.certificate;
    out.gap_mismatch = std::fabs(out.delta_star - out.omega_star);
    out.consistent = out.gap_mismatch <= kDualityTol;
    out.lp_iterations = gap.lp_iterations + agg.lp_iterations;
    return out;
}

} // namespace paretoagg
