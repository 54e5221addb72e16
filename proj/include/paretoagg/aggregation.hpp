#pragma once

// Minimum-oscillation Pareto weights under each sign regime, the centering
// construction, and the gap/oscillation duality certificate.

#include <optional>
#include <vector>

#include "paretoagg/core_types.hpp"
#include "paretoagg/pareto_audit.hpp"

namespace paretoagg {

// Residual e = v0 - sum_i a_i v_i per prize, and its oscillation.
struct ResidualFunction {
    std::vector<double> e;
    double omega = 0.0;
};

struct CenterResult {
    Weights weights;           // input a with intercept b = (max e + min e)/2
    double sup_residual = 0.0; // max |e - b| = omega(e)/2
    ResidualFunction residual;
};

CenterResult center(const std::vector<double>& a, const Problem& problem,
                    SignRegime regime = SignRegime::free);

struct AggregationResult {
    Weights weights;
    double oscillation = 0.0;
    double sup_residual = 0.0;
    SolveStatus status = SolveStatus::optimal;
    ResidualFunction residual;
    long lp_iterations = 0;
};

// regime must be nonneg or free; strictly positive weights go through
// positive_weight_margin instead.
AggregationResult min_oscillation(const Problem& problem, SignRegime regime,
                                  const Tolerances& tol = {});

struct MarginResult {
    SolveStatus status = SolveStatus::optimal; // infeasible iff eps < semistrong gap
    double mu_star = 0.0;                      // capped at 1
    std::optional<Weights> weights;            // present when mu_star > 1e-9
    bool trivial_epsilon = false;              // eps >= oscillation(v0)
    long lp_iterations = 0;
};

// Largest uniform lower bound on the weights compatible with oscillation
// <= eps; strictly positive aggregation exists iff mu_star > 0.
MarginResult positive_weight_margin(const Problem& problem, double eps,
                                    const Tolerances& tol = {});

struct DualityReport {
    double delta_star = 0.0;
    double omega_star = 0.0;
    Weights weights;
    ViolationCertificate certificate;
    double gap_mismatch = 0.0;
    bool consistent = false; // |delta - omega| <= 1e-7
    long lp_iterations = 0;
};

inline constexpr double kDualityTol = 1e-7;

DualityReport duality_certificate(const Problem& problem, const Tolerances& tol = {});

} // namespace paretoagg
