#include "paretoagg/seu_pooling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "paretoagg/lp.hpp"

namespace paretoagg {

Belief::Belief(std::vector<double> p_) : p(std::move(p_)) {
    if (p.empty()) throw InputError("belief must have at least one state");
    double sum = 0.0;
    for (double v : p) {
        if (!std::isfinite(v)) throw InputError("belief has a non-finite entry");
        if (v < -kLotterySumTol) throw InputError("belief has a negative entry");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > kLotteryNormalizeGate)
        throw InputError("belief mass deviates from 1 beyond the 1e-9 gate");
    for (double& v : p) v = std::max(0.0, v / sum);
}

SeuProblem::SeuProblem(PrizeSpace consequences_, std::vector<std::string> states_,
                       UtilityVector taste0_, std::vector<UtilityVector> tastes_, Belief belief0_,
                       std::vector<Belief> beliefs_)
    : consequences(std::move(consequences_)),
      states(std::move(states_)),
      taste0(std::move(taste0_)),
      tastes(std::move(tastes_)),
      belief0(std::move(belief0_)),
      beliefs(std::move(beliefs_)) {
    if (states.empty()) throw InputError("SEU problem needs at least one state");
    if (tastes.empty() || tastes.size() != beliefs.size())
        throw InputError("SEU problem needs matching taste and belief lists");
    if (taste0.size() != consequences.size())
        throw InputError("DM taste length does not match the consequence count");
    for (const auto& v : tastes)
        if (v.size() != consequences.size())
            throw InputError("taste length does not match the consequence count");
    if (belief0.size() != states.size())
        throw InputError("DM belief length does not match the state count");
    for (const auto& b : beliefs)
        if (b.size() != states.size())
            throw InputError("belief length does not match the state count");
}

double event_tv(const SignedResidual& res) {
    double pos = 0.0, neg = 0.0;
    for (double v : res.r) {
        pos += std::max(0.0, v);
        neg += std::max(0.0, -v);
    }
    return pos + neg;
}

TasteDecomposition taste_decompose(const SeuProblem& problem, double eps1,
                                   const Tolerances& tol) {
    if (!(eps1 >= 0.0)) throw InputError("epsilon1 must be >= 0");
    Problem tastes(problem.consequences, problem.taste0, problem.tastes);
    TasteDecomposition out;
    out.agg = min_oscillation(tastes, SignRegime::nonneg, tol);
    out.epsilon1 = eps1;
    out.holds = out.agg.sup_residual <= eps1 / 2.0 + tol.verdict_tol;
    return out;
}

BeliefPool belief_pool(const Belief& p0, const std::vector<Belief>& ps, const Tolerances& tol) {
    const std::size_t n = ps.size();
    const std::size_t s_count = p0.size();
    if (n == 0) throw InputError("belief pool needs at least one individual");
    for (const auto& b : ps)
        if (b.size() != s_count) throw InputError("belief dimensions do not match");

    // Variables: lambda (N), positive-part slacks u (S).
    // minimize sum u_s  s.t.  sum_i lambda_i Pi(s) - u_s <= P0(s), lambda in simplex.
    LinearProgramD lp(n + s_count);
    for (std::size_t s = 0; s < s_count; ++s) lp.objective[n + s] = 1.0;
    for (std::size_t s = 0; s < s_count; ++s) {
        std::vector<double> row(n + s_count, 0.0);
        for (std::size_t i = 0; i < n; ++i) row[i] = ps[i].p[s];
        row[n + s] = -1.0;
        lp.add_row(std::move(row), RowSense::le, p0.p[s]);
    }
    std::vector<double> simplex_row(n + s_count, 0.0);
    std::fill(simplex_row.begin(), simplex_row.begin() + n, 1.0);
    lp.add_row(std::move(simplex_row), RowSense::eq, 1.0);

    SimplexOptions<double> opts;
    opts.feas_tol = tol.feas_tol;
    opts.opt_tol = tol.opt_tol;
    const auto sol = solve_lp(lp, opts);
    if (sol.status != LpStatus::optimal)
        throw SolverError("belief pooling LP did not solve; the simplex is compact");

    BeliefPool out;
    out.lp_iterations = sol.iterations;
    out.positive_part_mass = std::max(0.0, sol.objective);
    out.lambda.assign(sol.z.begin(), sol.z.begin() + n);
    double mass = 0.0;
    for (double& l : out.lambda) {
        l = std::max(0.0, l); // clip the LP's -1e-12 noise, then renormalize
        mass += l;
    }
    for (double& l : out.lambda) l /= mass;

    out.residual.r.assign(s_count, 0.0);
    for (std::size_t s = 0; s < s_count; ++s) {
        double pooled = 0.0;
        for (std::size_t i = 0; i < n; ++i) pooled += out.lambda[i] * ps[i].p[s];
        out.residual.r[s] = p0.p[s] - pooled;
    }
    out.residual.tv_norm = event_tv(out.residual);
    return out;
}

FloorCheck likelihood_floor_check(const Belief& p0, const std::vector<Belief>& ps, double eps2) {
    if (!(eps2 >= 0.0 && eps2 <= 1.0)) throw InputError("epsilon2 must lie in [0, 1]");
    if (ps.empty()) throw InputError("floor check needs at least one individual");
    const std::size_t s_count = p0.size();
    for (const auto& b : ps)
        if (b.size() != s_count) throw InputError("belief dimensions do not match");
    if (s_count > kFloorEnumerationCap)
        throw InputError("state count exceeds the exhaustive event-enumeration cap of 24");

    FloorCheck out;
    out.epsilon2 = eps2;
    out.worst_slack = 0.0; // empty event
    std::uint64_t worst_mask = 0;

    const std::uint64_t n_events = std::uint64_t(1) << s_count;
    for (std::uint64_t mask = 1; mask < n_events; ++mask) {
        double pe0 = 0.0;
        for (std::size_t s = 0; s < s_count; ++s)
            if (mask >> s & 1) pe0 += p0.p[s];
        double min_pi = std::numeric_limits<double>::infinity();
        for (const auto& b : ps) {
            double pe = 0.0;
            for (std::size_t s = 0; s < s_count; ++s)
                if (mask >> s & 1) pe += b.p[s];
            min_pi = std::min(min_pi, pe);
        }
        const double slack = pe0 - min_pi;
        if (slack < out.worst_slack) {
            out.worst_slack = slack;
            worst_mask = mask;
        }
    }
    for (std::size_t s = 0; s < s_count; ++s)
        if (worst_mask >> s & 1) out.worst_event.push_back(s);
    out.holds = out.worst_slack >= -eps2 / 2.0 - 1e-10;
    return out;
}

} // namespace paretoagg
