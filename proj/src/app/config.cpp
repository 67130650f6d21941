#include "app/config.hpp"

#include "vortexfield/errors.hpp"

#include <cmath>

namespace vortexfield::app {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok) throw ConfigError(message);
}

void require_pair(const std::vector<double>& v, const char* flag)
{
    require(v.size() == 2, std::string(flag) + " expects two comma-separated numbers");
    require(std::isfinite(v[0]) && std::isfinite(v[1]), std::string(flag) + " must be finite");
}

}  // namespace

const char* command_name(Command c)
{
    switch (c) {
    case Command::minimize: return "minimize";
    case Command::landscape: return "landscape";
    case Command::field: return "field";
    case Command::verify: return "verify";
    }
    return "?";
}

void validate(const RunConfig& cfg)
{
    require(cfg.domain == "disk" || cfg.domain == "oval", "--domain must be disk or oval");
    require(std::isfinite(cfg.c) && cfg.c >= 0.0 && cfg.c < 0.5, "--c must lie in [0, 0.5)");
    require_pair(cfg.h, "--h");
    require_pair(cfg.s0, "--s0");
    require(cfg.grid.size() == 2, "--grid expects nr,nt");
    try {
        GridSpec{cfg.grid[0], cfg.grid[1]}.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("--grid: ") + e.what());
    }
    require(cfg.landscape_n >= 16, "--landscape-n must be >= 16");
    require(std::isfinite(cfg.tol) && cfg.tol > 0.0, "--tol must be positive");
    require(cfg.max_iter >= 1, "--max-iter must be >= 1");
    require(cfg.max_evals >= 1, "--max-evals must be >= 1");
    require(std::isfinite(cfg.h_max) && cfg.h_max > 0.0, "--h-max must be positive");
    require(std::hypot(cfg.h[0], cfg.h[1]) <= cfg.h_max,
            "--h: field magnitude exceeds --h-max (" + std::to_string(cfg.h_max) + ")");
    require(cfg.sample_rings >= 1 && cfg.sample_spokes >= 4, "--rings must be >= 1 and --spokes >= 4");
    require(std::isfinite(cfg.jitter) && cfg.jitter >= 0.0 && cfg.jitter < 1.0, "--jitter must lie in [0, 1)");
    if (!cfg.s.empty()) {
        require_pair(cfg.s, "--s");
        require(!VortexConfig::pair(cfg.s[0], cfg.s[1]).degenerate(), "--s: vortex angles coincide");
    }
    if (cfg.command == Command::field) {
        require(cfg.s.empty() != !cfg.auto_min, "field needs exactly one of --s or --auto-min");
    }
}

ConformalDomain make_domain(const RunConfig& cfg)
{
    return cfg.domain == "oval" ? ConformalDomain::oval(cfg.c) : ConformalDomain::disk();
}

ExternalField field_of(const RunConfig& cfg) { return {cfg.h[0], cfg.h[1]}; }

EnergySettings energy_settings(const RunConfig& cfg)
{
    EnergySettings s;
    s.grid = {cfg.grid[0], cfg.grid[1]};
    s.picard.tol = cfg.tol;
    s.picard.max_iter = cfg.max_iter;
    s.picard.h_max = cfg.h_max;
    return s;
}

NelderMeadOptions optimizer_options(const RunConfig& cfg)
{
    NelderMeadOptions o;
    o.max_evals = cfg.max_evals;
    return o;
}

SampleSpec sample_spec(const RunConfig& cfg)
{
    SampleSpec s;
    s.rings = cfg.sample_rings;
    s.spokes = cfg.sample_spokes;
    s.jitter = cfg.jitter;
    s.seed = cfg.seed;
    return s;
}

std::optional<AnglePair> fixed_angles(const RunConfig& cfg)
{
    if (cfg.s.empty()) return std::nullopt;
    return AnglePair{cfg.s[0], cfg.s[1]};
}

nlohmann::ordered_json to_json(const RunConfig& cfg)
{
    nlohmann::ordered_json j;
    j["command"] = command_name(cfg.command);
    j["domain"] = cfg.domain;
    if (cfg.domain == "oval") j["c"] = cfg.c;
    j["h"] = cfg.h;
    if (!cfg.s.empty()) j["s"] = cfg.s;
    j["s0"] = cfg.s0;
    j["grid"] = cfg.grid;
    j["landscape_n"] = cfg.landscape_n;
    j["tol"] = cfg.tol;
    j["max_iter"] = cfg.max_iter;
    j["max_evals"] = cfg.max_evals;
    j["h_max"] = cfg.h_max;
    j["boundary_nodes"] = EnergySettings{}.boundary_nodes;
    const NelderMeadOptions nm = optimizer_options(cfg);
    j["simplex_step"] = nm.initial_step;
    j["tol_x"] = nm.tol_x;
    j["tol_f"] = nm.tol_f;
    j["auto_min"] = cfg.auto_min;
    j["seed"] = cfg.seed;
    j["rings"] = cfg.sample_rings;
    j["spokes"] = cfg.sample_spokes;
    j["jitter"] = cfg.jitter;
    if (!cfg.only.empty()) j["only"] = cfg.only;
    j["svg"] = cfg.svg;
    return j;
}

}  // namespace vortexfield::app
