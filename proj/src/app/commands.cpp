#include "app/commands.hpp"

#include "app/output.hpp"
#include "app/verify.hpp"
#include "vortexfield/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>
#include <sstream>

namespace vortexfield::app {

namespace {

using Json = nlohmann::ordered_json;

struct Minimization {
    NelderMeadResult nm;
    EnergyBreakdown energy;
};

Minimization minimize(const RunConfig& cfg)
{
    const ConformalDomain domain = make_domain(cfg);
    const EnergySettings settings = energy_settings(cfg);
    const ExternalField h = field_of(cfg);
    Minimization m;
    m.nm = nelder_mead(make_energy_objective(domain, h, settings), {cfg.s0[0], cfg.s0[1]}, optimizer_options(cfg));
    m.energy = total_energy(domain, VortexConfig::pair(m.nm.s.s1, m.nm.s.s2), h, settings);
    return m;
}

Json vortex_json(const ConformalDomain& domain, AnglePair s)
{
    Json list = Json::array();
    for (double a : {s.s1, s.s2}) {
        const Complex w = domain.phi(std::polar(1.0, a));
        list.push_back(Json{{"s", a}, {"x", w.real()}, {"y", w.imag()}});
    }
    return list;
}

Json summary_json(const RunConfig& cfg, const Minimization& m)
{
    const ConformalDomain domain = make_domain(cfg);
    const SimplexState& st = m.nm.state;
    Json j;
    j["converged"] = st.converged;
    j["s_min"] = {m.nm.s.s1, m.nm.s.s2};
    j["separation"] = std::abs(angle_difference(m.nm.s.s1, m.nm.s.s2));
    j["vortices"] = vortex_json(domain, m.nm.s);
    j["w0"] = json_number(m.energy.w0);
    j["v_ext"] = json_number(m.energy.v_ext);
    j["total"] = json_number(m.energy.total);

    Json diag;
    diag["picard_iterations"] = m.energy.iterations;
    diag["picard_residual"] = json_number(m.energy.residual);
    diag["picard_converged"] = m.energy.converged;
    diag["boundary_nodes"] = m.energy.boundary_nodes;
    diag["grid_nodes"] = m.energy.grid_nodes;
    j["diagnostics"] = diag;

    Json opt;
    opt["evaluations"] = st.evaluations;
    opt["iterations"] = st.iterations;
    opt["reflections"] = st.reflections;
    opt["expansions"] = st.expansions;
    opt["contractions"] = st.contractions;
    opt["shrinks"] = st.shrinks;
    Json simplex = Json::array();
    for (const auto& v : st.vertices) simplex.push_back(Json{{"s", {v.s.s1, v.s.s2}}, {"value", json_number(v.value)}});
    opt["simplex"] = simplex;
    Json history = Json::array();
    for (double v : st.best_history) history.push_back(json_number(v));
    opt["best_history"] = history;
    j["optimizer"] = opt;
    j["config"] = to_json(cfg);
    return j;
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> parts;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

}  // namespace

int cmd_minimize(const RunConfig& cfg, std::ostream& out)
{
    prepare_output_dir(cfg.out);
    const Minimization m = minimize(cfg);
    write_file(cfg.out / "summary.json", dump(summary_json(cfg, m)));
    out << fmt::format("s_min = ({}, {})  W = {}  evaluations = {}  {}\n", m.nm.s.s1, m.nm.s.s2,
                       format_number(m.energy.total), m.nm.state.evaluations,
                       m.nm.state.converged ? "converged" : "evaluation budget exhausted");
    return m.nm.state.converged ? kExitOk : kExitBudget;
}

int cmd_landscape(const RunConfig& cfg, std::ostream& out)
{
    prepare_output_dir(cfg.out);
    const LandscapeGrid g = landscape(make_domain(cfg), field_of(cfg), cfg.landscape_n, energy_settings(cfg));
    write_file(cfg.out / "landscape.csv", landscape_csv(g));
    if (cfg.svg) write_file(cfg.out / "landscape.svg", landscape_svg(g));
    if (g.argmin_i >= 0) {
        out << fmt::format("grid minimum W = {} at (s1, s2) = ({}, {}); {} failed cells\n", g.min_value,
                           g.argmin().s1, g.argmin().s2, g.failures);
    } else {
        out << "no finite cell\n";
    }
    return kExitOk;
}

int cmd_field(const RunConfig& cfg, std::ostream& out)
{
    prepare_output_dir(cfg.out);
    const ConformalDomain domain = make_domain(cfg);
    AnglePair s;
    int status = kExitOk;
    if (auto fixed = fixed_angles(cfg)) {
        s = *fixed;
    } else {
        const Minimization m = minimize(cfg);
        write_file(cfg.out / "summary.json", dump(summary_json(cfg, m)));
        s = m.nm.s;
        if (!m.nm.state.converged) status = kExitBudget;
    }
    const VortexConfig a = VortexConfig::pair(s.s1, s.s2);
    const ExternalField h = field_of(cfg);
    const FieldSamples f = magnetization_field(domain, a, h, energy_settings(cfg), sample_spec(cfg));
    write_file(cfg.out / "field.csv", field_csv(f.samples));

    std::vector<Marker> markers;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const Complex w = domain.phi(a.position(j));
        markers.push_back({w.real(), w.imag()});
    }
    if (cfg.svg) write_file(cfg.out / "field.svg", field_svg(domain, f.samples, markers));

    Json meta;
    meta["s"] = {a.angle(0), a.angle(1)};
    meta["vortices"] = vortex_json(domain, {a.angle(0), a.angle(1)});
    meta["samples"] = f.samples.size();
    meta["skipped_outside"] = f.outside;
    meta["skipped_near_vortex"] = f.near_vortex;
    if (!h.is_zero() && !f.samples.empty()) {
        double align = 0.0;
        for (const auto& p : f.samples) align += (p.mx * h.hx + p.my * h.hy) / h.norm();
        meta["mean_alignment"] = align / static_cast<double>(f.samples.size());
    }
    meta["config"] = to_json(cfg);
    write_file(cfg.out / "field.json", dump(meta));
    out << fmt::format("{} samples at s = ({}, {}); skipped {} outside, {} near a vortex\n", f.samples.size(),
                       a.angle(0), a.angle(1), f.outside, f.near_vortex);
    return status;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    std::vector<std::string> groups = cfg.only.empty() ? verify_groups() : split(cfg.only);
    for (const auto& g : groups) {
        if (std::find(verify_groups().begin(), verify_groups().end(), g) == verify_groups().end()) {
            std::string known;
            for (const auto& k : verify_groups()) known += (known.empty() ? "" : ", ") + k;
            throw ConfigError("--only: unknown check set '" + g + "' (known: " + known + ")");
        }
    }
    prepare_output_dir(cfg.out);
    const auto checks = run_checks(groups);
    Json report = to_json(checks);
    report["groups"] = groups;
    write_file(cfg.out / "verify.json", dump(report));
    int failed = 0;
    for (const auto& c : checks) {
        out << format_check(c) << "\n";
        failed += c.pass ? 0 : 1;
    }
    out << fmt::format("{} of {} checks passed\n", checks.size() - failed, checks.size());
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        validate(cfg);
        switch (cfg.command) {
        case Command::minimize: return cmd_minimize(cfg, out);
        case Command::landscape: return cmd_landscape(cfg, out);
        case Command::field: return cmd_field(cfg, out);
        case Command::verify: return cmd_verify(cfg, out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const OutputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitConfig;
}

}  // namespace vortexfield::app
