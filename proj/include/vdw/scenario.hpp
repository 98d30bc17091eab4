#pragma once

#include "vdw/curve.hpp"
#include "vdw/nevanlinna.hpp"
#include "vdw/position.hpp"
#include "vdw/variety.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vdw {

/// Seeds for the randomized-with-verification searches.
struct ScenarioSeeds {
    std::uint64_t subspace = 1;
    std::uint64_t completion = 2;
    std::uint64_t audit = 3;
};

struct ScenarioTolerances {
    double margin_r0 = 10.0;
    bool require_margin_trend = false;
    double jensen_residual = 1e-6;
    double quadrature_rel_tol = 1e-9;
};

/// A fully validated scenario: variety, hypersurface family, curve(s), radius
/// grid and the checks to run. Parsed from a JSON file whose field names
/// mirror this struct.
struct Scenario {
    std::string id;
    std::shared_ptr<Variety> variety;
    std::vector<std::string> generator_strings;
    std::vector<Hypersurface> hypersurfaces;
    int N = 0;
    std::shared_ptr<Family> family;
    std::optional<RationalCurve> f;
    std::optional<RationalCurve> g;
    RGrid r_grid;
    std::vector<std::string> checks;
    ScenarioSeeds seeds;
    ScenarioTolerances tolerances;

    const RationalCurve& curve_f() const;
    const RationalCurve& curve_g() const;
};

/// Loads and validates a scenario file. Every polynomial must parse, the
/// generators must be homogeneous, declared degrees must match, curves are
/// reduced and must lie on the variety, the radius grid must start beyond 1,
/// and the declared dimension must pass the Hilbert growth test.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace vdw
