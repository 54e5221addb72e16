#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <cmath>
#include <random>

#include "paretoagg/problem_io.hpp"
#include "paretoagg/random_instances.hpp"
#include "paretoagg/reports.hpp"

using namespace paretoagg;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("paretoagg_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const std::string& text) const {
        const fs::path p = path / name;
        std::ofstream out(p);
        out << text;
        return p.string();
    }
};

const char* kOpposedAlpha0 = R"({
  "prizes": ["o1", "o2", "o3"],
  "dm": [0, 0, 1],
  "individuals": [[1, 0, 0], [0, 1, 1]],
  "epsilon": 0.9
})";

const char* kUtilitarian = R"({
  "prizes": ["a", "b"],
  "dm": [1.5, 3.0],
  "individuals": [[0.5, 1.0]],
  "epsilon": 0
})";

const char* kSeuFixture = R"({
  "prizes": ["c1", "c2", "c3"],
  "dm": [0.625, 0, 1],
  "individuals": [[0.75, 0.125, 1], [0.5, -0.125, 1]],
  "seu": {
    "states": ["s1", "s2", "s3"],
    "beliefs": {"dm": [0.375, 0.25, 0.375],
                "individuals": [[0.5, 0.25, 0.25], [0.25, 0.25, 0.5]]},
    "epsilon1": 0.5,
    "epsilon2": 0.25
  }
})";

} // namespace

TEST_CASE("audit exit codes and report fields") {
    TempDir dir;
    ToolOptions opts;

    SUBCASE("failing fixture exits 1 with the gap") {
        const auto path = dir.file("a.json", kOpposedAlpha0);
        const CmdResult r = cmd_audit(path, opts);
        CHECK(r.exit_code == exit_axiom_failed);
        CHECK(r.report["result"]["semistrong"]["verdict"] == "fails");
        CHECK(std::fabs(r.report["result"]["semistrong"]["gap"].get<double>() - 1.0) <= 1e-9);
        CHECK(r.report["result"]["sequential"]["cross_check_ok"] == true);
        CHECK(r.report["tolerances"]["verdict_tol"].get<double>() == 1e-8);
    }
    SUBCASE("holding fixture exits 0") {
        const auto path = dir.file("u.json", kUtilitarian);
        const CmdResult r = cmd_audit(path, opts);
        CHECK(r.exit_code == exit_ok);
        for (const char* ax : {"semistrong", "indifference", "strong", "sequential"})
            CHECK(r.report["result"][ax]["verdict"] == "holds");
    }
    SUBCASE("epsilon flag overrides the file") {
        const auto path = dir.file("a.json", kOpposedAlpha0);
        opts.epsilon = 1.0;
        const CmdResult r = cmd_audit(path, opts);
        CHECK(r.exit_code == exit_ok);
        CHECK(r.report["result"]["semistrong"]["trivial_epsilon"] == true);
    }
    SUBCASE("missing epsilon is an input error") {
        const auto path = dir.file("n.json",
                                   R"({"prizes":["a"],"dm":[0],"individuals":[[1]]})");
        const CmdResult r = cmd_audit(path, opts);
        CHECK(r.exit_code == exit_input_error);
    }
    SUBCASE("dimension mismatch exits 2 with a field diagnostic") {
        const auto path = dir.file("bad.json",
                                   R"({"prizes":["a","b","c","d"],"dm":[0,1,2],"individuals":[[1,2,3,4]]})");
        const CmdResult r = cmd_audit(path, opts);
        CHECK(r.exit_code == exit_input_error);
        const std::string err = r.report["error"].get<std::string>();
        CHECK(err.find("dm") != std::string::npos);
        CHECK(err.find("4 prizes") != std::string::npos);
    }
    SUBCASE("malformed json exits 2") {
        const auto path = dir.file("broken.json", "{ not json");
        CHECK(cmd_audit(path, opts).exit_code == exit_input_error);
    }
}

TEST_CASE("solve regimes") {
    TempDir dir;
    const auto path = dir.file("u.json", kUtilitarian);
    ToolOptions opts;

    const CmdResult nn = cmd_solve(path, opts);
    CHECK(nn.exit_code == exit_ok);
    CHECK(nn.report["result"]["oscillation"].get<double>() <= 1e-10);
    CHECK(nn.report["result"]["reconstruction_error"].get<double>() <= 1e-10);
    CHECK(std::fabs(nn.report["result"]["weights"]["a"][0].get<double>() - 3.0) <= 1e-8);

    opts.regime = SignRegime::free;
    CHECK(cmd_solve(path, opts).exit_code == exit_ok);

    opts.regime = SignRegime::positive;
    const CmdResult pos = cmd_solve(path, opts);
    CHECK(pos.exit_code == exit_ok);
    CHECK(pos.report["result"]["mu_star"].get<double>() > 1e-9);
}

TEST_CASE("duality command and random batch") {
    TempDir dir;
    ToolOptions opts;
    const CmdResult one = cmd_duality(dir.file("u.json", kUtilitarian), opts);
    CHECK(one.exit_code == exit_ok);
    CHECK(one.report["result"]["consistent"] == true);

    opts.random_batch = 25;
    opts.seed = 99;
    const CmdResult batch = cmd_duality("", opts);
    CHECK(batch.exit_code == exit_ok);
    CHECK(batch.report["result"]["count"] == 25);
    CHECK(batch.report["result"]["all_consistent"] == true);
    CHECK(batch.report["result"]["seed"] == 99);
    CHECK(batch.report["result"]["max_gap_mismatch"].get<double>() <= 1e-7);
}

TEST_CASE("duality over a directory of generated problem files") {
    TempDir dir;
    std::mt19937_64 rng(7);
    for (int t = 0; t < 6; ++t) {
        const Problem p = random_problem(rng, 5, 3);
        ProblemFile pf;
        pf.prizes = p.prizes.labels;
        pf.dm = p.v0.values;
        for (const auto& v : p.vs) pf.individuals.push_back(v.values);
        dir.file("inst" + std::to_string(t) + ".json", problem_echo(pf).dump());
    }
    const CmdResult r = cmd_duality(dir.path.string(), ToolOptions{});
    CHECK(r.exit_code == exit_ok);
    REQUIRE(r.report["files"].size() == 6);
    for (const auto& f : r.report["files"])
        CHECK(f["report"]["result"]["gap_mismatch"].get<double>() <= 1e-7);
}

TEST_CASE("oracle sandwich brackets the opposed-pair value through the CLI layer") {
    TempDir dir;
    const auto path = dir.file("p.json", R"({
      "prizes": ["o1", "o2", "o3"],
      "dm": [0, 0.5, 1],
      "individuals": [[1, 0, 0], [0, 1, 1]]
    })");
    ToolOptions opts;
    opts.grid.k = 20;
    opts.grid.step = 0.05;
    const CmdResult r = cmd_oracle(path, opts);
    CHECK(r.exit_code == exit_ok);
    const auto& res = r.report["result"];
    CHECK(res["brute_gap"].get<double>() <= 0.5 + 1e-9);
    CHECK(res["brute_min_oscillation"].get<double>() >= 0.5 - 1e-9);
    CHECK(std::fabs(res["delta_star"].get<double>() - 0.5) <= 1e-9);
    CHECK(std::fabs(res["omega_star"].get<double>() - 0.5) <= 1e-9);
}

TEST_CASE("PARETO_AGG_SEED drives batch generation") {
    ToolOptions opts;
    opts.random_batch = 3;
    ::setenv("PARETO_AGG_SEED", "4242", 1);
    const CmdResult r = cmd_duality("", opts);
    ::unsetenv("PARETO_AGG_SEED");
    CHECK(r.report["result"]["seed"] == 4242);
}

TEST_CASE("seu command on the pooled fixture") {
    TempDir dir;
    const CmdResult r = cmd_seu(dir.file("seu.json", kSeuFixture), ToolOptions{});
    CHECK(r.exit_code == exit_ok);
    const auto& res = r.report["result"];
    CHECK(std::fabs(res["belief_pool"]["lambda"][0].get<double>() - 0.5) <= 1e-12);
    CHECK(res["belief_pool"]["tv_norm"].get<double>() <= 1e-12);
    CHECK(res["taste"]["verdict"] == "holds");
    CHECK(res["likelihood_floor"]["verdict"] == "holds");
}

TEST_CASE("oracle command reports a valid sandwich") {
    TempDir dir;
    ToolOptions opts;
    opts.grid.k = 8;
    opts.grid.step = 0.1;
    opts.exact = true;
    const CmdResult r = cmd_oracle(dir.file("a.json", kOpposedAlpha0), opts);
    CHECK(r.exit_code == exit_ok);
    const auto& res = r.report["result"];
    CHECK(res["lower_ok"] == true);
    CHECK(res["upper_ok"] == true);
    CHECK(res["duality_ok"] == true);
    CHECK(res["exact"]["duality_equal"] == true);
}

TEST_CASE("batch directories merge in filename order") {
    TempDir dir;
    dir.file("b.json", kUtilitarian);
    dir.file("a.json", kOpposedAlpha0);
    dir.file("ignored.txt", "not a problem");
    const CmdResult r = cmd_audit(dir.path.string(), ToolOptions{});
    CHECK(r.exit_code == exit_axiom_failed); // max of 1 and 0
    REQUIRE(r.report["files"].size() == 2);
    CHECK(r.report["files"][0]["path"].get<std::string>().find("a.json") != std::string::npos);
    CHECK(r.report["files"][1]["path"].get<std::string>().find("b.json") != std::string::npos);
    CHECK(r.report["files"][0]["exit_code"] == exit_axiom_failed);
    CHECK(r.report["files"][1]["exit_code"] == exit_ok);
}

TEST_CASE("csv importer matches the json route") {
    TempDir dir;
    const auto jpath = dir.file("p.json", kOpposedAlpha0);
    const auto cpath = dir.file("p.csv", "o1,o2,o3\n0,0,1\n1,0,0\n0,1,1\n");
    ToolOptions opts;
    opts.epsilon = 0.9;
    const CmdResult rj = cmd_audit(jpath, opts);
    const CmdResult rc = cmd_audit(cpath, opts);
    CHECK(rj.report["result"]["semistrong"]["gap"] == rc.report["result"]["semistrong"]["gap"]);
    CHECK(rc.exit_code == exit_axiom_failed);

    const auto bad = dir.file("bad.csv", "o1,o2\n0,x\n1,0\n");
    CHECK(cmd_audit(bad, opts).exit_code == exit_input_error);
}

TEST_CASE("report echo round-trips bit-for-bit") {
    TempDir dir;
    ToolOptions opts;
    // an irrational-ish epsilon and utilities exercise shortest-round-trip dumps
    const auto path = dir.file("p.json", R"({
      "prizes": ["a", "b", "c"],
      "dm": [0.1, 0.7071067811865476, 1e-3],
      "individuals": [[0.30000000000000004, 1, -2.2250738585072014e-308]],
      "epsilon": 0.123456789012345678
    })");
    const CmdResult first = cmd_audit(path, opts);
    REQUIRE(first.exit_code != exit_input_error);
    const auto echoed = dir.file("echo.json", first.report["problem"].dump());
    const CmdResult second = cmd_audit(echoed, opts);
    CHECK(first.report["result"].dump() == second.report["result"].dump());
    CHECK(first.report["problem"].dump() == second.report["problem"].dump());
}

TEST_CASE("csv rendering flattens deterministically") {
    json j = {{"b", 1.5}, {"a", {{"x", true}}}, {"arr", {1, 2}}};
    const std::string out = render_report(j, "csv");
    CHECK(out.find("a.x,true\n") != std::string::npos);
    CHECK(out.find("arr[0],1\n") != std::string::npos);
    CHECK(out.find("b,1.5\n") != std::string::npos);
    CHECK(render_report(j, "json").find("\"b\"") != std::string::npos);
}

TEST_CASE("unknown command throws") {
    CHECK_THROWS_AS(run_command("frobnicate", "x.json", ToolOptions{}), InputError);
}
