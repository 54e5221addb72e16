#pragma once

// Shared analytic fixtures.
//
// opposed_pair_profile(alpha): three prizes, two individuals with exactly
// opposed utilities (u1 + u2 == 1), DM utility (0, alpha, 1). The residual
// against any weighting keeps coordinates 2 and 3 exactly 1 - alpha apart,
// so gap = min oscillation = 1 - alpha under every sign regime.
//
// quarter_disc_polygon(theta1, n_arc): prize space = origin plus unit-arc
// points at angles {0, theta1, ..., pi/2}; v0 = -x, v1 = y. The largest
// uniform weight with oscillation <= 1 is tan(theta1/2): the polyhedral
// shadow of the quarter disc, where no positive weight works at all.
//
// near_common_taste_seu(eps): two individuals whose tastes differ by eps/2
// in sup norm, DM = their even mix; beliefs pool exactly at lambda = 1/2.

#include <cmath>
#include <string>
#include <vector>

#include "paretoagg/core_types.hpp"
#include "paretoagg/seu_pooling.hpp"

namespace paretoagg::fixtures {

inline Problem opposed_pair_profile(double alpha) {
    return Problem(PrizeSpace({"o1", "o2", "o3"}), UtilityVector({0.0, alpha, 1.0}),
                   {UtilityVector({1.0, 0.0, 0.0}), UtilityVector({0.0, 1.0, 1.0})});
}

inline Problem quarter_disc_polygon(double theta1, int n_arc = 6) {
    const double half_pi = std::asin(1.0);
    std::vector<std::string> labels{"origin"};
    std::vector<double> v0{0.0}, v1{0.0};
    std::vector<double> angles{0.0, theta1};
    for (int j = 1; j < n_arc; ++j)
        angles.push_back(theta1 + (half_pi - theta1) * j / (n_arc - 1));
    for (std::size_t i = 0; i < angles.size(); ++i) {
        labels.push_back("arc" + std::to_string(i));
        v0.push_back(-std::cos(angles[i]));
        v1.push_back(std::sin(angles[i]));
    }
    return Problem(PrizeSpace(std::move(labels)), UtilityVector(std::move(v0)),
                   {UtilityVector(std::move(v1))});
}

inline SeuProblem near_common_taste_seu(double eps) {
    UtilityVector v1({1.5 * eps, 0.25 * eps, 1.0});
    UtilityVector v2({eps, -0.25 * eps, 1.0});
    std::vector<double> v0(3);
    for (int i = 0; i < 3; ++i) v0[i] = 0.5 * v1.values[i] + 0.5 * v2.values[i];
    Belief mu1({0.5, 0.25, 0.25});
    Belief mu2({0.25, 0.25, 0.5});
    std::vector<double> p0(3);
    for (int i = 0; i < 3; ++i) p0[i] = 0.5 * mu1.p[i] + 0.5 * mu2.p[i];
    return SeuProblem(PrizeSpace({"c1", "c2", "c3"}), {"s1", "s2", "s3"}, UtilityVector(v0),
                      {v1, v2}, Belief(p0), {mu1, mu2});
}

// v0 = sum a_i v_i + b with the given nonnegative weights.
inline Problem utilitarian_instance(const std::vector<std::vector<double>>& vs,
                                    const std::vector<double>& a, double b) {
    const std::size_t m = vs.at(0).size();
    std::vector<double> v0(m, b);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t o = 0; o < m; ++o) v0[o] += a[i] * vs[i][o];
    std::vector<std::string> labels;
    std::vector<UtilityVector> uvs;
    for (std::size_t o = 0; o < m; ++o) labels.push_back("p" + std::to_string(o + 1));
    for (const auto& v : vs) uvs.emplace_back(v);
    return Problem(PrizeSpace(std::move(labels)), UtilityVector(std::move(v0)), std::move(uvs));
}

} // namespace paretoagg::fixtures
