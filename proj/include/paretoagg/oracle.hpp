#pragma once

// Independent brute-force verification layer: grid enumeration and
// exact-rational recomputation of every gap and optimum on small instances.
// Nothing here reuses the LP path it checks.

#include <cstddef>
#include <vector>

#include "paretoagg/core_types.hpp"
#include "paretoagg/rational.hpp"

namespace paretoagg {

inline constexpr std::size_t kGridCap = 1000000;

struct GridSpec {
    int k = 10;         // lottery grid: entries are multiples of 1/k
    double box = 0.0;   // weight box bound B; <= 0 means use the default heuristic
    double step = 0.1;  // weight grid step h
    double widen = 1.0; // multiplier on the heuristic box
};

// Heuristic weight-box bound B = 1 + ||v0||_inf * M / max_i osc(v_i),
// skipping constant individuals. The optimal weights are bounded but no
// closed form is available, hence the widen knob.
double default_weight_box(const Problem& problem);

// Number of lottery grid points for (M, k); throws past kGridCap.
std::size_t lottery_grid_size(std::size_t m, int k);

// Max of u0(y) - u0(x) over grid pairs satisfying the semistrong antecedent
// exactly. A lower bound on delta* that converges as k grows.
double brute_gap(const Problem& problem, const GridSpec& spec);

// Min over gridded a >= 0 of osc(v0 - sum a_i v_i). An upper bound on omega*.
double brute_min_oscillation(const Problem& problem, const GridSpec& spec);

struct SandwichReport {
    double brute_gap = 0.0;
    double delta_star = 0.0;
    double omega_star = 0.0;
    double brute_min_oscillation = 0.0;
    double k_constant = 0.0; // instance-reported C with delta - brute <= C/k
    double box_used = 0.0;
    bool lower_ok = false;   // brute_gap <= delta* + 1e-9
    bool upper_ok = false;   // brute_min_oscillation >= omega* - 1e-9
    bool duality_ok = false; // |delta* - omega*| <= 1e-7
    long lp_iterations = 0;
};

// Runs both brute bounds against the LP values and reports the sandwich
// brute_gap <= delta* = omega* <= brute_min_oscillation.
SandwichReport oracle_sandwich(const Problem& problem, const GridSpec& spec,
                               const Tolerances& tol = {});

struct ExactReport {
    Rational delta_star;
    Rational delta_ind;
    Rational omega_nonneg;
    Rational omega_free;
    bool margin_feasible = false;
    Rational mu_star;
    bool duality_equal = false;      // delta* == omega*(nonneg), exactly
    bool indifference_equal = false; // delta*_ind == omega*(free), exactly
};

// Recomputes every optimum in rational arithmetic (doubles convert exactly)
// and asserts the two dualities as exact equalities. epsilon feeds the
// positive-weight margin.
ExactReport exact_recheck(const Problem& problem, double epsilon);

// Exact-mode twins used by tests to arbitrate tolerance disputes.
Rational exact_semistrong_gap(const Problem& problem);
Rational exact_indifference_gap(const Problem& problem);
Rational exact_min_oscillation(const Problem& problem, SignRegime regime);
bool exact_check_strong(const Problem& problem, double epsilon);

} // namespace paretoagg
