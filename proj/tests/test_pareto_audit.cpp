#include <doctest.h>

#include <cmath>
#include <random>

#include "paretoagg/aggregation.hpp"
#include "paretoagg/oracle.hpp"
#include "paretoagg/pareto_audit.hpp"
#include "paretoagg/random_instances.hpp"
#include "test_fixtures.hpp"

using namespace paretoagg;
using namespace paretoagg::fixtures;

namespace {

// Antecedent feasibility of a certificate at the stated tolerance.
void check_certificate(const Problem& p, const ViolationCertificate& c) {
    for (const auto& v : p.vs) {
        const double ux = evaluate(v, c.x), uy = evaluate(v, c.y);
        if (c.axiom == Axiom::indifference)
            CHECK(std::fabs(ux - uy) <= 1e-8);
        else
            CHECK(ux >= uy - 1e-8);
    }
    CHECK(std::fabs((evaluate(p.v0, c.y) - evaluate(p.v0, c.x)) - c.gap) <= 1e-8);
}

} // namespace

TEST_CASE("DM equal to the single individual has zero gap") {
    const Problem p(PrizeSpace({"a", "b"}), UtilityVector({0, 1}), {UtilityVector({0, 1})});
    CHECK(semistrong_gap(p).gap <= 1e-10);
}

TEST_CASE("opposed-pair profile gaps equal 1 - alpha, brute-checked") {
    for (double alpha : {0.0, 0.5}) {
        const Problem p = opposed_pair_profile(alpha);
        const GapResult g = semistrong_gap(p);
        CHECK(g.gap == doctest::Approx(1.0 - alpha).epsilon(1e-9));
        check_certificate(p, g.certificate);

        // the profile's optimum sits on the k=4 grid, so the brute bound is tight
        CHECK(brute_gap(p, GridSpec{4, 0, 0.1, 1.0}) == doctest::Approx(1.0 - alpha).epsilon(1e-12));
        CHECK(exact_semistrong_gap(p) == Rational(1) - rational_from_double(alpha));
    }
}

TEST_CASE("indifference gap fixtures") {
    {
        const Problem p(PrizeSpace({"a", "b"}), UtilityVector({2.0, 2.0}),
                        {UtilityVector({0, 1})});
        CHECK(indifference_gap(p).gap <= 1e-10);
    }
    {
        const GapResult g = indifference_gap(opposed_pair_profile(0.5));
        CHECK(g.gap == doctest::Approx(0.5).epsilon(1e-9));
    }
    {
        // v0 = v1 / 2: equal u1 forces equal u0
        const Problem p(PrizeSpace({"a", "b"}), UtilityVector({0, 1}), {UtilityVector({0, 2})});
        CHECK(indifference_gap(p).gap <= 1e-10);
    }
}

TEST_CASE("semistrong verdicts across epsilon") {
    const Problem p = opposed_pair_profile(0.0);
    SUBCASE("epsilon at the DM oscillation holds trivially") {
        const CheckResult c = check_semistrong(p, 1.0);
        CHECK(c.holds);
        CHECK(c.trivial_epsilon);
    }
    SUBCASE("fails below the gap") {
        const CheckResult c = check_semistrong(p, 0.9);
        CHECK_FALSE(c.holds);
        CHECK(c.gap == doctest::Approx(1.0).epsilon(1e-9));
        REQUIRE(c.certificate.has_value());
        check_certificate(p, *c.certificate);
    }
    SUBCASE("holds at the gap") {
        CHECK(check_semistrong(opposed_pair_profile(0.5), 0.5).holds);
    }
}

TEST_CASE("indifference verdicts mirror the semistrong ones") {
    CHECK(check_indifference(opposed_pair_profile(0.0), 1.0).holds);
    CHECK_FALSE(check_indifference(opposed_pair_profile(0.0), 0.9).holds);
    CHECK(check_indifference(opposed_pair_profile(0.5), 0.5).holds);
}

TEST_CASE("strong check on classical and boundary cases") {
    SUBCASE("positive-weight utilitarian holds at eps = 0") {
        const Problem p = utilitarian_instance({{1, 0, 0}, {0, 1, 2}}, {1.0, 1.0}, 0.0);
        CHECK(check_strong(p, 0.0).holds);
    }
    SUBCASE("opposed-pair profile at the boundary: no strict improvement is possible") {
        // u1 + u2 == 1 everywhere, so unanimous-weak-with-some-strict pairs do
        // not exist and the strong check reduces to the semistrong one. Exact
        // arithmetic agrees.
        const Problem p = opposed_pair_profile(0.5);
        const CheckResult c = check_strong(p, 0.5);
        CHECK(c.holds);
        CHECK(c.strict_gap <= 1e-9);
        CHECK(exact_check_strong(p, 0.5));
    }
    SUBCASE("constant DM with a non-constant individual fails at eps = 0") {
        const Problem p(PrizeSpace({"a", "b"}), UtilityVector({1.0, 1.0}),
                        {UtilityVector({0.0, 1.0})});
        const CheckResult c = check_strong(p, 0.0);
        CHECK_FALSE(c.holds);
        CHECK(c.strict_gap > 1e-8);
        REQUIRE(c.certificate.has_value());
        check_certificate(p, *c.certificate);
        CHECK_FALSE(exact_check_strong(p, 0.0));
    }
    SUBCASE("coarse quarter-disc polygon holds at eps = 1") {
        CHECK(check_strong(quarter_disc_polygon(M_PI / 8), 1.0).holds);
    }
}

TEST_CASE("sequential check equals the strong one and cross-validates the margin") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ud(0.0, 1.2);
    for (int t = 0; t < 60; ++t) {
        const Problem p = random_problem(rng, 5, 3);
        const double eps = ud(rng) * (oscillation(p.v0) + 0.1);
        const CheckResult seq = check_sequential_strong(p, eps);
        const CheckResult strong = check_strong(p, eps);
        CHECK(seq.holds == strong.holds);
        REQUIRE(seq.cross_check_ok.has_value());
        CHECK(*seq.cross_check_ok);
        const MarginResult m = positive_weight_margin(p, eps);
        CHECK(seq.holds == (m.status == SolveStatus::optimal && m.mu_star > 1e-9));
    }
}

TEST_CASE("gaps are nonnegative and shrink when individuals are added") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        const Problem p = random_problem(rng, 5, 3);
        const double d = semistrong_gap(p).gap;
        const double di = indifference_gap(p).gap;
        CHECK(d >= 0.0);
        CHECK(di >= 0.0);

        std::vector<double> extra(p.num_prizes());
        std::uniform_real_distribution<double> ud(-1.0, 1.0);
        for (double& x : extra) x = ud(rng);
        std::vector<UtilityVector> vs = p.vs;
        vs.emplace_back(std::move(extra));
        const Problem bigger(p.prizes, p.v0, std::move(vs));
        CHECK(semistrong_gap(bigger).gap <= d + 1e-9);
    }
}

TEST_CASE("exact utilitarian instances have zero gap") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ud(-1.0, 1.0), ad(0.0, 2.0);
    for (int t = 0; t < 40; ++t) {
        const std::size_t m = 2 + rng() % 4, n = 1 + rng() % 3;
        std::vector<std::vector<double>> vs(n, std::vector<double>(m));
        for (auto& v : vs)
            for (double& x : v) x = ud(rng);
        std::vector<double> a(n);
        for (double& x : a) x = ad(rng);
        const Problem p = utilitarian_instance(vs, a, ud(rng));
        CHECK(semistrong_gap(p).gap <= 1e-8);
    }
}

TEST_CASE("verdicts are monotone in epsilon") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 30; ++t) {
        const Problem p = random_problem(rng, 4, 3);
        const double base = semistrong_gap(p).gap;
        bool prev = check_semistrong(p, 0.0).holds;
        for (double f : {0.5, 0.9, 1.0, 1.1, 2.0}) {
            const bool cur = check_semistrong(p, f * base + 1e-12).holds;
            if (prev) CHECK(cur);
            prev = cur;
        }
    }
}

TEST_CASE("gap scales covariantly with positive rescalings of the DM utility") {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> ld(0.1, 3.0), cd(-2.0, 2.0);
    for (int t = 0; t < 40; ++t) {
        const Problem p = random_problem(rng, 5, 3);
        const double d = semistrong_gap(p).gap;
        const double lam = ld(rng), c = cd(rng);
        std::vector<double> v0 = p.v0.values;
        for (double& x : v0) x = lam * x + c;
        const Problem scaled(p.prizes, UtilityVector(std::move(v0)), p.vs);
        CHECK(std::fabs(semistrong_gap(scaled).gap - lam * d) <= 1e-9 * (1.0 + lam * d));
    }
}

TEST_CASE("gap equals the nonneg min oscillation on random instances") {
    std::mt19937_64 rng(46);
    for (int t = 0; t < 60; ++t) {
        const Problem p = random_problem(rng);
        CHECK(std::fabs(semistrong_gap(p).gap -
                        min_oscillation(p, SignRegime::nonneg).oscillation) <= kDualityTol);
        CHECK(std::fabs(indifference_gap(p).gap -
                        min_oscillation(p, SignRegime::free).oscillation) <= kDualityTol);
    }
}

TEST_CASE("certificates satisfy the antecedent constraints on random instances") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 40; ++t) {
        const Problem p = random_problem(rng, 5, 3);
        check_certificate(p, semistrong_gap(p).certificate);
        check_certificate(p, indifference_gap(p).certificate);
    }
}

TEST_CASE("epsilon must be nonnegative") {
    CHECK_THROWS_AS(check_semistrong(opposed_pair_profile(0.0), -0.1), InputError);
}
