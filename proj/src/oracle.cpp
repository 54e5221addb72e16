#include "paretoagg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "paretoagg/aggregation.hpp"
#include "paretoagg/lp.hpp"
#include "paretoagg/lp_formulations.hpp"
#include "paretoagg/pareto_audit.hpp"

namespace paretoagg {

namespace {

// Integer compositions of k into m parts, lexicographic. Each row is one
// grid lottery scaled by k.
std::vector<std::vector<int>> compositions(std::size_t m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m, 0);
    const auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == m) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int j = left; j >= 0; --j) {
            cur[pos] = j;
            self(self, pos + 1, left - j);
        }
    };
    rec(rec, 0, k);
    return out;
}

std::vector<Rational> to_rational(const std::vector<double>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(rational_from_double(x));
    return out;
}

std::vector<std::vector<Rational>> rational_matrix(const Problem& p) {
    std::vector<std::vector<Rational>> vs;
    vs.reserve(p.num_individuals());
    for (const auto& v : p.vs) vs.push_back(to_rational(v.values));
    return vs;
}

} // namespace

double default_weight_box(const Problem& problem) {
    double max_osc = 0.0;
    for (const auto& v : problem.vs) max_osc = std::max(max_osc, oscillation(v));
    if (max_osc == 0.0) return 1.0; // all individuals constant: a = 0 suffices
    double v0_inf = 0.0;
    for (double v : problem.v0.values) v0_inf = std::max(v0_inf, std::fabs(v));
    return 1.0 + v0_inf * static_cast<double>(problem.num_prizes()) / max_osc;
}

std::size_t lottery_grid_size(std::size_t m, int k) {
    if (k < 1) throw InputError("grid resolution k must be >= 1");
    // C(k + m - 1, m - 1) with overflow-safe incremental evaluation.
    long double n = 1.0L;
    for (std::size_t j = 1; j < m; ++j) {
        n = n * static_cast<long double>(k + j) / static_cast<long double>(j);
        if (n > 2.0L * static_cast<long double>(kGridCap))
            throw InputError("lottery grid exceeds the 1e6-point cap");
    }
    const auto count = static_cast<std::size_t>(n + 0.5L);
    if (count > kGridCap) throw InputError("lottery grid exceeds the 1e6-point cap");
    return count;
}

double brute_gap(const Problem& problem, const GridSpec& spec) {
    const std::size_t m = problem.num_prizes();
    lottery_grid_size(m, spec.k);
    const auto grid = compositions(m, spec.k);
    const std::size_t n_pts = grid.size();
    const std::size_t n_ind = problem.num_individuals();

    // Utilities on the grid, scaled by k (exact integer combinations).
    std::vector<double> u0(n_pts, 0.0);
    std::vector<std::vector<double>> ui(n_ind, std::vector<double>(n_pts, 0.0));
    for (std::size_t p = 0; p < n_pts; ++p) {
        for (std::size_t o = 0; o < m; ++o) {
            if (grid[p][o] == 0) continue;
            const double w = grid[p][o];
            u0[p] += w * problem.v0.values[o];
            for (std::size_t i = 0; i < n_ind; ++i) ui[i][p] += w * problem.vs[i].values[o];
        }
    }

    double best = 0.0; // x = y is always feasible
    for (std::size_t xi = 0; xi < n_pts; ++xi) {
        for (std::size_t yi = 0; yi < n_pts; ++yi) {
            const double diff = u0[yi] - u0[xi];
            if (diff <= best) continue;
            bool ok = true;
            for (std::size_t i = 0; i < n_ind; ++i) {
                if (ui[i][xi] < ui[i][yi]) {
                    ok = false;
                    break;
                }
            }
            if (ok) best = diff;
        }
    }
    return best / static_cast<double>(spec.k);
}

double brute_min_oscillation(const Problem& problem, const GridSpec& spec) {
    const std::size_t m = problem.num_prizes();
    const std::size_t n = problem.num_individuals();
    const double box = (spec.box > 0.0 ? spec.box : default_weight_box(problem)) * spec.widen;
    const double h = spec.step;
    if (!(h > 0.0) || !(box > 0.0)) throw InputError("weight grid needs positive box and step");

    const auto steps = static_cast<std::size_t>(std::floor(box / h)) + 1;
    double total = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<double>(steps);
        if (total > static_cast<double>(kGridCap))
            throw InputError("weight grid exceeds the 1e6-point cap");
    }

    std::vector<std::size_t> idx(n, 0);
    std::vector<double> e(m, 0.0);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        for (std::size_t o = 0; o < m; ++o) {
            double v = problem.v0.values[o];
            for (std::size_t i = 0; i < n; ++i)
                v -= static_cast<double>(idx[i]) * h * problem.vs[i].values[o];
            e[o] = v;
        }
        const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
        best = std::min(best, *hi - *lo);

        std::size_t pos = 0;
        while (pos < n && ++idx[pos] >= steps) idx[pos++] = 0;
        if (pos == n) break;
    }
    return best;
}

SandwichReport oracle_sandwich(const Problem& problem, const GridSpec& spec,
                               const Tolerances& tol) {
    SandwichReport out;
    GridSpec used = spec;
    if (used.box <= 0.0) used.box = default_weight_box(problem);
    out.box_used = used.box * used.widen;

    out.brute_gap = brute_gap(problem, used);
    out.brute_min_oscillation = brute_min_oscillation(problem, used);
    const GapResult gap = semistrong_gap(problem, tol);
    const AggregationResult agg = min_oscillation(problem, SignRegime::nonneg, tol);
    out.delta_star = gap.gap;
    out.omega_star = agg.oscillation;
    out.lp_iterations = gap.lp_iterations + agg.lp_iterations;

    out.k_constant = (out.delta_star - out.brute_gap) * static_cast<double>(used.k);
    out.lower_ok = out.brute_gap <= out.delta_star + 1e-9;
    out.upper_ok = out.brute_min_oscillation >= out.omega_star - 1e-9;
    out.duality_ok = std::fabs(out.delta_star - out.omega_star) <= kDualityTol;
    return out;
}

Rational exact_semistrong_gap(const Problem& problem) {
    const auto lp = lps::gap_lp<Rational>(to_rational(problem.v0.values),
                                          rational_matrix(problem), false);
    const auto sol = solve_exact(lp);
    if (sol.status != LpStatus::optimal) throw SolverError("exact gap LP did not solve");
    return -sol.objective;
}

Rational exact_indifference_gap(const Problem& problem) {
    const auto lp = lps::gap_lp<Rational>(to_rational(problem.v0.values),
                                          rational_matrix(problem), true);
    const auto sol = solve_exact(lp);
    if (sol.status != LpStatus::optimal) throw SolverError("exact gap LP did not solve");
    return -sol.objective;
}

Rational exact_min_oscillation(const Problem& problem, SignRegime regime) {
    if (regime == SignRegime::positive)
        throw InputError("exact_min_oscillation takes regime nonneg or free");
    bool constant = true;
    for (const auto& v : problem.vs)
        if (oscillation(v) > 0.0) constant = false;
    if (constant) {
        const auto v0 = to_rational(problem.v0.values);
        const auto [lo, hi] = std::minmax_element(v0.begin(), v0.end());
        return *hi - *lo;
    }
    const auto lp = lps::min_oscillation_lp<Rational>(
        to_rational(problem.v0.values), rational_matrix(problem), regime == SignRegime::nonneg);
    const auto sol = solve_exact(lp);
    if (sol.status != LpStatus::optimal) throw SolverError("exact oscillation LP did not solve");
    return sol.objective;
}

bool exact_check_strong(const Problem& problem, double epsilon) {
    const Rational eps = rational_from_double(epsilon);
    if (exact_semistrong_gap(problem) > eps) return false;
    const auto v0 = to_rational(problem.v0.values);
    const auto vs = rational_matrix(problem);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const auto lp = lps::strict_improvement_lp<Rational>(v0, vs, k, eps);
        const auto sol = solve_exact(lp);
        if (sol.status == LpStatus::infeasible) continue;
        if (sol.status != LpStatus::optimal)
            throw SolverError("exact strict-improvement LP did not classify");
        if (-sol.objective > 0) return false;
    }
    return true;
}

ExactReport exact_recheck(const Problem& problem, double epsilon) {
    if (!(epsilon >= 0.0)) throw InputError("epsilon must be >= 0");
    ExactReport out;
    out.delta_star = exact_semistrong_gap(problem);
    out.delta_ind = exact_indifference_gap(problem);
    out.omega_nonneg = exact_min_oscillation(problem, SignRegime::nonneg);
    out.omega_free = exact_min_oscillation(problem, SignRegime::free);
    out.duality_equal = out.delta_star == out.omega_nonneg;
    out.indifference_equal = out.delta_ind == out.omega_free;

    const auto lp = lps::margin_lp<Rational>(to_rational(problem.v0.values),
                                             rational_matrix(problem),
                                             rational_from_double(epsilon));
    const auto sol = solve_exact(lp);
    if (sol.status == LpStatus::optimal) {
        out.margin_feasible = true;
        out.mu_star = -sol.objective;
    } else if (sol.status == LpStatus::infeasible) {
        out.margin_feasible = false;
        out.mu_star = 0;
    } else {
        throw SolverError("exact margin LP did not classify");
    }
    return out;
}

} // namespace paretoagg
