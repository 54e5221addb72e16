#pragma once

// Shared domain types: prize spaces, lotteries, utility vectors and the
// oscillation/evaluation primitives. Everything is immutable after
// construction and safe to share across threads.

#include <cstddef>
#include <string>
#include <vector>

#include "paretoagg/errors.hpp"

namespace paretoagg {

// Lotteries whose mass deviates from 1 by at most this are renormalized;
// larger deviations are rejected as malformed input.
inline constexpr double kLotteryNormalizeGate = 1e-9;
inline constexpr double kLotterySumTol = 1e-12;

enum class SolveStatus { optimal, infeasible, unbounded };

const char* to_string(SolveStatus s);

struct PrizeSpace {
    std::vector<std::string> labels;

    explicit PrizeSpace(std::vector<std::string> labels_);
    std::size_t size() const { return labels.size(); }
};

struct Lottery {
    std::vector<double> probs;

    explicit Lottery(std::vector<double> probs_);
    std::size_t size() const { return probs.size(); }
};

struct UtilityVector {
    std::vector<double> values;

    explicit UtilityVector(std::vector<double> values_);
    std::size_t size() const { return values.size(); }
};

// DM utility plus N >= 1 individual utilities over a common prize space.
struct Problem {
    PrizeSpace prizes;
    UtilityVector v0;
    std::vector<UtilityVector> vs;

    Problem(PrizeSpace prizes_, UtilityVector v0_, std::vector<UtilityVector> vs_);
    std::size_t num_prizes() const { return prizes.size(); }
    std::size_t num_individuals() const { return vs.size(); }
};

enum class SignRegime { free, nonneg, positive };

const char* to_string(SignRegime r);

struct Weights {
    std::vector<double> a;
    double b = 0.0;
    SignRegime regime = SignRegime::nonneg;
};

// Enforces the recorded sign regime: nonneg allows a_i >= -1e-12, positive
// requires min a_i > 0.
void validate(const Weights& w);

double evaluate(const UtilityVector& v, const Lottery& p);
double oscillation(const UtilityVector& v);

// Solver tolerances surfaced through the CLI; defaults are what the audits
// are calibrated against.
struct Tolerances {
    double feas_tol = 1e-9;
    double opt_tol = 1e-9;
    double verdict_tol = 1e-8;
};

} // namespace paretoagg
