#pragma once

// Exact violation gaps for the epsilon-Pareto axioms, with boolean verdicts
// and witnessing lottery pairs.

#include <optional>
#include <vector>

#include "paretoagg/core_types.hpp"

namespace paretoagg {

enum class Axiom { semistrong, indifference, strong, sequential_strong };

const char* to_string(Axiom a);

// A lottery pair witnessing a Pareto-gap value: gap = u0(y) - u0(x) at the
// witness, with the axiom's antecedent satisfied within 1e-8.
struct ViolationCertificate {
    Lottery x{std::vector<double>{1.0}};
    Lottery y{std::vector<double>{1.0}};
    double gap = 0.0;
    Axiom axiom = Axiom::semistrong;
};

struct GapResult {
    double gap = 0.0;
    ViolationCertificate certificate;
    long lp_iterations = 0;
};

// delta* = max u0(y) - u0(x) over pairs with ui(x) >= ui(y) for all i.
// Always >= 0 (x = y is feasible).
GapResult semistrong_gap(const Problem& problem, const Tolerances& tol = {});

// Same with the equality antecedent ui(x) = ui(y).
GapResult indifference_gap(const Problem& problem, const Tolerances& tol = {});

struct CheckResult {
    bool holds = false;
    Axiom axiom = Axiom::semistrong;
    double gap = 0.0;          // semistrong/indifference gap backing the verdict
    double strict_gap = 0.0;   // strong checks: largest strict improvement found
    bool trivial_epsilon = false; // eps >= oscillation(v0): axiom holds trivially
    std::optional<ViolationCertificate> certificate;
    std::optional<bool> cross_check_ok; // sequential check vs positive-weight margin
    long lp_iterations = 0;
};

CheckResult check_semistrong(const Problem& problem, double eps, const Tolerances& tol = {});
CheckResult check_indifference(const Problem& problem, double eps, const Tolerances& tol = {});

// Holds iff semistrong holds and no individual can strictly improve among
// pairs where the DM loses at least eps (one LP per individual).
CheckResult check_strong(const Problem& problem, double eps, const Tolerances& tol = {});

// On a finite prize simplex the sequential axiom is equivalent to the plain
// strong one; delegates there and cross-validates against the
// positive-weight margin from the aggregation module.
CheckResult check_sequential_strong(const Problem& problem, double eps, const Tolerances& tol = {});

} // namespace paretoagg
