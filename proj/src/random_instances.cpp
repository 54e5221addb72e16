#include "paretoagg/random_instances.hpp"

#include <string>

namespace paretoagg {

namespace {

PrizeSpace labeled_prizes(std::size_t m) {
    std::vector<std::string> labels;
    labels.reserve(m);
    for (std::size_t o = 0; o < m; ++o) labels.push_back("p" + std::to_string(o + 1));
    return PrizeSpace(std::move(labels));
}

} // namespace

Problem random_problem(std::mt19937_64& rng, std::size_t m_max, std::size_t n_max) {
    std::uniform_int_distribution<std::size_t> md(2, m_max), nd(1, n_max);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    const std::size_t m = md(rng), n = nd(rng);
    auto draw = [&] {
        std::vector<double> v(m);
        for (double& x : v) x = ud(rng);
        return UtilityVector(std::move(v));
    };
    UtilityVector v0 = draw();
    std::vector<UtilityVector> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) vs.push_back(draw());
    return Problem(labeled_prizes(m), std::move(v0), std::move(vs));
}

Problem random_rational_problem(std::mt19937_64& rng, std::size_t m_max, std::size_t n_max,
                                int denom) {
    std::uniform_int_distribution<std::size_t> md(2, m_max), nd(1, n_max);
    std::uniform_int_distribution<int> jd(-denom, denom);
    const std::size_t m = md(rng), n = nd(rng);
    auto draw = [&] {
        std::vector<double> v(m);
        for (double& x : v) x = static_cast<double>(jd(rng)) / denom;
        return UtilityVector(std::move(v));
    };
    UtilityVector v0 = draw();
    std::vector<UtilityVector> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) vs.push_back(draw());
    return Problem(labeled_prizes(m), std::move(v0), std::move(vs));
}

Belief random_belief(std::mt19937_64& rng, std::size_t states) {
    // Dirichlet(1,...,1) via normalized exponentials.
    std::exponential_distribution<double> ed(1.0);
    std::vector<double> p(states);
    double sum = 0.0;
    for (double& x : p) {
        x = ed(rng);
        sum += x;
    }
    for (double& x : p) x /= sum;
    return Belief(std::move(p));
}

} // namespace paretoagg
