#pragma once

// Finite-state taste/belief decomposition: tastes aggregate on the
// consequence simplex, beliefs pool by minimizing the positive-part mass of
// the signed residual, and the likelihood floor is checked by exhaustive
// event enumeration.

#include <cstddef>
#include <string>
#include <vector>

#include "paretoagg/aggregation.hpp"
#include "paretoagg/core_types.hpp"

namespace paretoagg {

// Probability mass function over the state list.
struct Belief {
    std::vector<double> p;

    explicit Belief(std::vector<double> p_);
    std::size_t size() const { return p.size(); }
};

struct SeuProblem {
    PrizeSpace consequences;
    std::vector<std::string> states;
    UtilityVector taste0;
    std::vector<UtilityVector> tastes;
    Belief belief0;
    std::vector<Belief> beliefs;

    SeuProblem(PrizeSpace consequences_, std::vector<std::string> states_, UtilityVector taste0_,
               std::vector<UtilityVector> tastes_, Belief belief0_, std::vector<Belief> beliefs_);
    std::size_t num_states() const { return states.size(); }
    std::size_t num_individuals() const { return tastes.size(); }
};

// r = P0 - sum_i lambda_i P_i per state; entries sum to 0 and the total
// variation norm equals the event-supremum form within 1e-10.
struct SignedResidual {
    std::vector<double> r;
    double tv_norm = 0.0;
};

// Positive-part mass plus negative-part mass; equals tv_norm.
double event_tv(const SignedResidual& r);

struct TasteDecomposition {
    AggregationResult agg;
    double epsilon1 = 0.0;
    bool holds = false; // sup_residual <= eps1/2, i.e. omega* <= eps1
};

TasteDecomposition taste_decompose(const SeuProblem& problem, double eps1,
                                   const Tolerances& tol = {});

struct BeliefPool {
    std::vector<double> lambda;       // in the N-simplex exactly
    SignedResidual residual;
    double positive_part_mass = 0.0;  // optimal LP value; tv_norm = 2 * this
    long lp_iterations = 0;
};

BeliefPool belief_pool(const Belief& p0, const std::vector<Belief>& ps,
                       const Tolerances& tol = {});

inline constexpr std::size_t kFloorEnumerationCap = 24; // states; 2^24 events

struct FloorCheck {
    bool holds = false;
    double epsilon2 = 0.0;
    double worst_slack = 0.0;              // min over events of P0(E) - min_i Pi(E)
    std::vector<std::size_t> worst_event;  // state indices achieving it
};

// Holds iff P0(E) >= min_i Pi(E) - eps2/2 - 1e-10 for every event E; refuses
// profiles beyond the enumeration cap rather than sampling.
FloorCheck likelihood_floor_check(const Belief& p0, const std::vector<Belief>& ps, double eps2);

} // namespace paretoagg
