#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vdw/error.hpp"
#include "vdw/runner.hpp"
#include "vdw/parser.hpp"
#include "vdw/scenario.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace vdw;

namespace {

std::filesystem::path scenario_dir() { return std::filesystem::path(VDW_SCENARIO_DIR); }

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "vdw_scenario_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream os(path, std::ios::trunc);
    os << content;
    return path;
}

const char* kValidTemplate = R"({
  "id": "tmp",
  "variety": { "ambient_n": 2, "dim_k": 1, "generators": ["x0*x2 - x1^2"] },
  "hypersurfaces": [
    { "poly": "x1 - 2*x0", "degree": 1 },
    { "poly": "x2 - 4*x0", "degree": 1 },
    { "poly": "x2 + x0", "degree": 1 }
  ],
  "N": 2,
  "curves": { "f": ["1", "z", "z^2"] },
  "r_grid": { "r_min": 2.5, "r_max": 50, "points": 6, "spacing": "log" },
  "checks": ["position"]
})";

}  // namespace

TEST_CASE("every shipped scenario loads and validates") {
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(scenario_dir())) {
        if (entry.path().extension() != ".json") continue;
        const Scenario sc = load_scenario(entry.path());
        CHECK(!sc.id.empty());
        CHECK(!sc.checks.empty());
        CHECK(sc.r_grid.r_min > 1.0);
        for (const auto& name : sc.checks) {
            const auto& known = known_checks();
            CHECK(std::find(known.begin(), known.end(), name) != known.end());
        }
        ++count;
    }
    CHECK(count >= 12);
}

TEST_CASE("conic scenario precomputes the expected quantities") {
    const Scenario sc = load_scenario(scenario_dir() / "conic_smt.json");
    CHECK(sc.variety->dim_k() == 1);
    CHECK(sc.variety->hilbert_function(1) == 3);
    CHECK(sc.family->q() == 7);
    CHECK(sc.family->common_degree() == 1);
}

TEST_CASE("validation: inhomogeneous generator is rejected") {
    std::string bad(kValidTemplate);
    bad.replace(bad.find("x0*x2 - x1^2"), 12, "x0*x2 - x1^3");
    CHECK_THROWS_AS(load_scenario(write_temp("inhomogeneous.json", bad)), ValidationError);
    try {
        load_scenario(write_temp("inhomogeneous.json", bad));
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("not homogeneous") != std::string::npos);
    }
}

TEST_CASE("validation: curve must lie on the variety") {
    std::string bad(kValidTemplate);
    bad.replace(bad.find("\"f\": [\"1\", \"z\", \"z^2\"]"), 23, "\"f\": [\"1\", \"z\", \"z^3\"]");
    try {
        load_scenario(write_temp("off_variety.json", bad));
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("does not lie on the variety") != std::string::npos);
        CHECK(std::string(e.what()).find("x0*x2") != std::string::npos);
    }
}

TEST_CASE("validation: degree mismatch and grid bounds") {
    std::string bad_degree(kValidTemplate);
    bad_degree.replace(bad_degree.find("{ \"poly\": \"x1 - 2*x0\", \"degree\": 1 }"), 37,
                       "{ \"poly\": \"x1 - 2*x0\", \"degree\": 2 }");
    CHECK_THROWS_AS(load_scenario(write_temp("bad_degree.json", bad_degree)), ValidationError);

    std::string bad_grid(kValidTemplate);
    bad_grid.replace(bad_grid.find("\"r_min\": 2.5"), 12, "\"r_min\": 0.5");
    CHECK_THROWS_AS(load_scenario(write_temp("bad_grid.json", bad_grid)), ValidationError);

    std::string bad_dim(kValidTemplate);
    bad_dim.replace(bad_dim.find("\"dim_k\": 1"), 10, "\"dim_k\": 2");
    CHECK_THROWS_AS(load_scenario(write_temp("bad_dim.json", bad_dim)), ValidationError);
}

TEST_CASE("validation: curve representations are reduced on load") {
    std::string scaled(kValidTemplate);
    scaled.replace(scaled.find("\"f\": [\"1\", \"z\", \"z^2\"]"), 23,
                   "\"f\": [\"z\", \"z^2\", \"z^3\"]");
    const Scenario sc = load_scenario(write_temp("scaled_curve.json", scaled));
    CHECK(sc.curve_f().components()[0] == parse_poly("1", std::vector<std::string>{"z"}));
    CHECK(sc.curve_f().degree() == 2);
}

TEST_CASE("runner: statuses and exit codes per contract") {
    const auto out = std::filesystem::temp_directory_path() / "vdw_runner_tests";
    {
        const Scenario sc = load_scenario(scenario_dir() / "p1_threshold.json");
        const RunReport rep = run(sc, {}, out);
        CHECK(rep.exit_code() == 0);
        for (const auto& r : rep.results) CHECK(r.status == CheckStatus::pass);
    }
    {
        const Scenario sc = load_scenario(scenario_dir() / "position_fail.json");
        const RunReport rep = run(sc, {}, out);
        CHECK(rep.exit_code() == 2);
    }
    {
        const Scenario sc = load_scenario(scenario_dir() / "unicity_violation.json");
        const RunReport rep = run(sc, {}, out);
        CHECK(rep.exit_code() == 2);
    }
    {
        // Unknown check names count as failures.
        const Scenario sc = load_scenario(scenario_dir() / "p1_threshold.json");
        const std::vector<std::string> checks{"no_such_check"};
        const RunReport rep = run(sc, checks, out);
        CHECK(rep.exit_code() == 1);
    }
}

TEST_CASE("runner: artifacts are deterministic for equal seeds") {
    const auto out_a = std::filesystem::temp_directory_path() / "vdw_det_a";
    const auto out_b = std::filesystem::temp_directory_path() / "vdw_det_b";
    std::filesystem::remove_all(out_a);
    std::filesystem::remove_all(out_b);
    const Scenario sc = load_scenario(scenario_dir() / "p1_mixed_degrees.json");
    const RunReport rep_a = run(sc, {}, out_a);
    const RunReport rep_b = run(sc, {}, out_b);
    CHECK(rep_a.exit_code() == rep_b.exit_code());
    for (const auto& entry : std::filesystem::directory_iterator(out_a)) {
        const auto twin = out_b / entry.path().filename();
        REQUIRE(std::filesystem::exists(twin));
        std::ifstream fa(entry.path(), std::ios::binary), fb(twin, std::ios::binary);
        std::string sa((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
        std::string sb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
        CHECK(sa == sb);
        CHECK(!sa.empty());
    }
}
