#include "paretoagg/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace paretoagg {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

const char* to_string(SignRegime r) {
    switch (r) {
        case SignRegime::free: return "free";
        case SignRegime::nonneg: return "nonneg";
        case SignRegime::positive: return "positive";
    }
    return "unknown";
}

PrizeSpace::PrizeSpace(std::vector<std::string> labels_) : labels(std::move(labels_)) {
    if (labels.empty()) throw InputError("prize space must contain at least one prize");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw InputError("prize labels must be non-empty");
        if (!seen.insert(l).second) throw InputError("duplicate prize label: " + l);
    }
}

Lottery::Lottery(std::vector<double> probs_) : probs(std::move(probs_)) {
    if (probs.empty()) throw InputError("lottery must have at least one entry");
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p)) throw InputError("lottery has a non-finite entry");
        if (p < -kLotterySumTol) throw InputError("lottery has a negative entry");
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kLotteryNormalizeGate)
        throw InputError("lottery mass deviates from 1 beyond the 1e-9 gate");
    for (double& p : probs) p = std::max(0.0, p / sum);
}

UtilityVector::UtilityVector(std::vector<double> values_) : values(std::move(values_)) {
    if (values.empty()) throw InputError("utility vector must have at least one entry");
    for (double v : values)
        if (!std::isfinite(v)) throw InputError("utility vector has a non-finite entry");
}

Problem::Problem(PrizeSpace prizes_, UtilityVector v0_, std::vector<UtilityVector> vs_)
    : prizes(std::move(prizes_)), v0(std::move(v0_)), vs(std::move(vs_)) {
    if (vs.empty()) throw InputError("problem needs at least one individual");
    if (v0.size() != prizes.size())
        throw InputError("DM utility vector length does not match the prize count");
    for (const auto& v : vs)
        if (v.size() != prizes.size())
            throw InputError("individual utility vector length does not match the prize count");
}

void validate(const Weights& w) {
    if (!std::isfinite(w.b)) throw InputError("weight intercept must be finite");
    double min_a = std::numeric_limits<double>::infinity();
    for (double ai : w.a) {
        if (!std::isfinite(ai)) throw InputError("weights must be finite");
        min_a = std::min(min_a, ai);
    }
    if (w.regime == SignRegime::nonneg && min_a < -1e-12)
        throw InputError("nonneg weights carry a negative entry");
    if (w.regime == SignRegime::positive && !(min_a > 0.0))
        throw InputError("positive weights carry a nonpositive entry");
}

double evaluate(const UtilityVector& v, const Lottery& p) {
    if (v.size() != p.size()) throw InputError("utility/lottery dimension mismatch");
    double acc = 0.0;
    for (std::size_t o = 0; o < p.size(); ++o) acc += p.probs[o] * v.values[o];
    return acc;
}

double oscillation(const UtilityVector& v) {
    const auto [lo, hi] = std::minmax_element(v.values.begin(), v.values.end());
    return *hi - *lo;
}

} // namespace paretoagg
