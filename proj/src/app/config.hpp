#pragma once

#include "vortexfield/geom.hpp"
#include "vortexfield/micromag.hpp"
#include "vortexfield/optimize.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vortexfield::app {

enum class Command { minimize, landscape, field, verify };

const char* command_name(Command c);

/// Invalid user input. Reported as a single diagnostic line, exit status 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::minimize;
    std::string domain = "disk";
    double c = 0.2;
    std::vector<double> h = {0.0, 0.0};
    std::vector<double> s;  // empty unless --s was given
    std::vector<double> s0 = {0.5, 2.5};
    std::vector<int> grid = {128, 256};
    int landscape_n = 64;
    double tol = 1e-9;
    int max_iter = 50;
    int max_evals = 500;
    double h_max = 1.0;
    std::filesystem::path out = "out";
    bool svg = false;
    bool auto_min = false;
    std::string only;
    std::uint64_t seed = 1;
    int sample_rings = 12;
    int sample_spokes = 48;
    double jitter = 0.0;
};

/// Checks every field against the preconditions of the computation `cfg.command` runs.
void validate(const RunConfig& cfg);

ConformalDomain make_domain(const RunConfig& cfg);
ExternalField field_of(const RunConfig& cfg);
EnergySettings energy_settings(const RunConfig& cfg);
NelderMeadOptions optimizer_options(const RunConfig& cfg);
SampleSpec sample_spec(const RunConfig& cfg);
std::optional<AnglePair> fixed_angles(const RunConfig& cfg);

/// Resolved configuration, echoed into every summary.
nlohmann::ordered_json to_json(const RunConfig& cfg);

}  // namespace vortexfield::app
