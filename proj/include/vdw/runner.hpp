#pragma once

#include "vdw/scenario.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace vdw {

enum class CheckStatus { pass, fail, hypothesis_violated, inconclusive };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string message;
    std::vector<std::string> artifacts;  // files written under the output directory
};

struct RunReport {
    std::string scenario_id;
    std::vector<CheckResult> results;
    double wall_seconds = 0.0;

    /// 0 all pass; 1 any fail; 3 inconclusive present (no fail);
    /// 2 hypothesis violations only.
    int exit_code() const;
};

/// All check names `run` understands, in execution order.
const std::vector<std::string>& known_checks();

/// Executes the requested checks (empty selection = the scenario's own list)
/// and writes CSV artifacts atomically under out_dir. Module errors become
/// "fail" results with the message attached; hypothesis violations and
/// inconclusive certificates keep their own statuses.
RunReport run(const Scenario& scenario, std::span<const std::string> check_names,
              const std::filesystem::path& out_dir);

void print_report(const RunReport& report, std::ostream& os);

}  // namespace vdw
