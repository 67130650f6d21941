#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace vortexfield::app {

struct CheckResult {
    std::string group;
    std::string name;
    std::string relation;  ///< "abs" (|measured - reference| <= tolerance), "at_most" or "at_least"
    double measured = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

const std::vector<std::string>& verify_groups();

/// Runs the checks of the named groups in the order of verify_groups().
std::vector<CheckResult> run_checks(const std::vector<std::string>& groups);

std::string format_check(const CheckResult& c);
nlohmann::ordered_json to_json(const std::vector<CheckResult>& checks);

}  // namespace vortexfield::app
