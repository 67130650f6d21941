// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles/descent.hpp"
#include "vortexfield/micromag.hpp"
#include "vortexfield/optimize.hpp"
#include "vortexfield/quadrature.hpp"
#include "vortexfield/renorm.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace vortexfield;

namespace {

constexpr double kPi = std::numbers::pi;
const double kW0Antipodal = -kPi * std::log(2.0);

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
};

double separation(AnglePair s) { return std::abs(angle_difference(s.s1, s.s2)); }

Outcome disk_without_field()
{
    const NelderMeadResult r = nelder_mead(make_energy_objective(ConformalDomain::disk(), {0.0, 0.0}), {0.5, 2.5});
    const double sep_err = std::abs(separation(r.s) - kPi);
    const double w_err = std::abs(r.value - kW0Antipodal);
    return {r.state.converged && sep_err < 1e-3 && w_err < 1e-4,
            fmt::format("||s1-s2|-pi| = {:.3e} (< 1e-3), |W + pi log 2| = {:.3e} (< 1e-4)", sep_err, w_err)};
}

Outcome disk_with_field()
{
    const NelderMeadResult r = nelder_mead(make_energy_objective(ConformalDomain::disk(), {-0.01, 0.0}), {0.5, 2.5});
    const double e1 = std::abs(angle_difference(0.0, r.s.s1));
    const double e2 = std::abs(angle_difference(kPi, r.s.s2));
    return {e1 < 0.05 && e2 < 0.05,
            fmt::format("s = ({:.6f}, {:.6f}); |s1| = {:.3e}, |s2 - pi| = {:.3e} (< 0.05)", r.s.s1, r.s.s2, e1, e2)};
}

Outcome disk_reduction()
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    double worst = 0.0;
    int done = 0;
    while (done < 20) {
        const auto a = VortexConfig::pair(ang(rng), ang(rng));
        if (a.degenerate()) continue;
        worst = std::max(worst, std::abs(w0_conformal(ConformalDomain::disk(), a, 1024) - w0_disk(a)));
        ++done;
    }
    return {worst <= 1e-6, fmt::format("max |w0_conformal - w0_disk| over 20 configurations = {:.3e} (<= 1e-6)", worst)};
}

Outcome punctured_limit()
{
    const auto a = VortexConfig::pair(0.0, kPi);
    const double rhos[] = {0.1, 0.05, 0.025};
    std::vector<double> e;
    for (double rho : rhos) e.push_back(punctured_energy(a, rho) - 2.0 * kPi * std::log(1.0 / rho));
    bool toward = true;
    for (std::size_t k = 1; k < e.size(); ++k) {
        toward = toward && std::abs(e[k] - kW0Antipodal) < std::abs(e[k - 1] - kW0Antipodal);
    }
    const double gap = std::abs(e.back() - kW0Antipodal);
    return {toward && gap < 5e-2,
            fmt::format("I(rho) - 2pi log(1/rho) = {:.6f}, {:.6f}, {:.6f} at rho = 0.1, 0.05, 0.025; "
                        "gap to -pi log 2 = {:.4f} (< 5e-2), approaching: {}",
                        e[0], e[1], e[2], gap, toward ? "yes" : "no")};
}

Outcome log_sin_identities()
{
    const double l2 = std::log(2.0);
    const double e1 = std::abs(singular_quadrature_1d(LogSinIntegral::log_sin) + 0.5 * kPi * l2);
    const double e2 = std::abs(singular_quadrature_1d(LogSinIntegral::log_sin_squared) - 0.5 * kPi * (l2 * l2 + kPi * kPi / 12));
    return {e1 <= 1e-6 && e2 <= 1e-6, fmt::format("errors {:.3e}, {:.3e} (<= 1e-6)", e1, e2)};
}

Outcome solver_order()
{
    auto orders = [](auto f, auto exact) {
        std::vector<double> err;
        for (int n : {16, 32, 64}) {
            const GridSpec g{n, 2 * n};
            err.push_back(max_abs_difference(solve_dirichlet(PolarField::sample(g, f)), PolarField::sample(g, exact)));
        }
        return std::vector<double>{std::log2(err[0] / err[1]), std::log2(err[1] / err[2])};
    };
    const auto p = orders([](double, double) { return 4.0; }, [](double r, double) { return 1.0 - r * r; });
    const auto q = orders([](double r, double t) { return 8.0 * r * std::cos(t); },
                          [](double r, double t) { return (r - r * r * r) * std::cos(t); });
    const bool ok = p[0] >= 1.9 && p[1] >= 1.9 && q[0] >= 1.9 && q[1] >= 1.9;
    return {ok, fmt::format("orders 1-r^2: {:.3f}, {:.3f}; (r-r^3)cos t: {:.3f}, {:.3f} (>= 1.9)", p[0], p[1], q[0], q[1])};
}

struct FieldCase {
    VortexConfig a;
    ExternalField h;
};

const std::vector<FieldCase>& field_cases()
{
    static const std::vector<FieldCase> c = {{VortexConfig::pair(0.0, kPi), {0.0, 0.01}},
                                             {VortexConfig::pair(0.5, 2.5), {-0.01, 0.0}},
                                             {VortexConfig::pair(1.0, 4.0), {0.05, -0.08}}};
    return c;
}

Outcome picard_vs_descent()
{
    const GridSpec g{32, 64};
    double worst = 0.0;
    bool converged = true;
    for (const auto& c : field_cases()) {
        const auto samples = canonical_samples(c.a, g);
        const PicardResult p = picard_solve(c.a, c.h, g);
        const oracle::DescentResult d = oracle::minimize_g(g, samples, c.h.vec());
        converged = converged && p.report.converged && d.converged;
        worst = std::max(worst, max_abs_difference(p.theta, d.theta));
    }
    return {converged && worst <= 1e-6,
            fmt::format("max |theta_picard - theta_descent| over 3 instances = {:.3e} (<= 1e-6), both converged: {}",
                        worst, converged ? "yes" : "no")};
}

Outcome minimality()
{
    const GridSpec g{};
    const std::vector<PolarField> bumps = {
        PolarField::sample(g, [](double r, double) { return 1.0 - r * r; }),
        PolarField::sample(g, [](double r, double t) { return (r - r * r * r) * std::cos(t); }),
        PolarField::sample(g, [](double r, double t) { return r * r * (1.0 - r) * std::sin(2.0 * t); }),
        PolarField::sample(g, [](double r, double t) {
            const double q = (r - 0.7) / 0.2;
            return std::abs(q) < 1.0 ? std::pow(1.0 - q * q, 2) * std::cos(t - 1.0) : 0.0;
        }),
        PolarField::sample(g, [](double r, double t) { return (1.0 - r) * std::exp(-4.0 * r * r) * (1.0 + std::sin(3.0 * t)); }),
    };
    double margin = 1e300;
    int tested = 0;
    for (const auto& c : field_cases()) {
        const auto samples = canonical_samples(c.a, g);
        const PicardResult p = picard_solve(c.a, c.h, g);
        const double g_star = g_functional(p.theta, samples, c.h.vec());
        for (const auto& b : bumps) {
            for (double eps : {-0.3, -0.1, 0.1, 0.3}) {
                PolarField q = p.theta;
                for (std::size_t n = 0; n < q.values().size(); ++n) q.values()[n] += eps * b.values()[n];
                margin = std::min(margin, g_functional(q, samples, c.h.vec()) - g_star);
                ++tested;
            }
        }
    }
    return {margin >= -1e-10, fmt::format("min G(theta* + eps b) - G(theta*) over {} perturbations = {:.3e} (>= -1e-10)",
                                          tested, margin)};
}

double mean_alignment(ExternalField h)
{
    const auto oval = ConformalDomain::oval(0.2);
    EnergySettings settings;
    settings.picard.h_max = 1.0;
    const NelderMeadResult r = nelder_mead(make_energy_objective(oval, h, settings), {0.5, 2.5});
    const auto a = VortexConfig::pair(r.s.s1, r.s.s2);
    const PicardResult th = picard_solve(a, h, settings.grid, settings.picard);
    SampleSpec spec;
    spec.boundary_inset = 1.0 / spec.rings;  // outer ring moved inside: interior samples only
    const FieldSamples f = magnetization_at(oval, a, th.theta, sample_lattice(oval, spec), spec.vortex_guard);
    double sum = 0.0;
    for (const auto& s : f.samples) sum += (s.mx * h.hx + s.my * h.hy) / h.norm();
    return sum / static_cast<double>(f.samples.size());
}

Outcome oval_qualitative()
{
    const OracleResult o = grid_oracle(ConformalDomain::oval(0.2), {0.0, 0.0}, 48);
    const double sep_err = std::abs(separation(o.s) - kPi);
    const double strong = mean_alignment({0.0, 1.0});
    const double weak = mean_alignment({0.0, 0.01});
    return {sep_err <= o.refined_step && strong > weak,
            fmt::format("h=0 oracle separation error {:.3e} (<= cell {:.4f}); mean m.h/|h|: h=(0,1) {:.4f} vs h=(0,0.01) {:.4f}",
                        sep_err, o.refined_step, strong, weak)};
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome determinism()
{
    const fs::path root = fs::temp_directory_path() / "vortexfield_acceptance";
    fs::remove_all(root);
    std::vector<std::string> files;
    for (const char* run : {"a", "b"}) {
        const std::string cmd = fmt::format("{} landscape --domain disk --h -0.01,0 --landscape-n 32 --out {} >/dev/null",
                                            VORTEXFIELD_CLI_PATH, (root / run).string());
        if (std::system(cmd.c_str()) != 0) return {false, "landscape command failed"};
        files.push_back(slurp(root / run / "landscape.csv"));
    }
    const bool same = !files[0].empty() && files[0] == files[1];
    return {same, fmt::format("two runs, {} bytes each, identical: {}", files[0].size(), same ? "yes" : "no")};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "disk h=(0,0) minimizer", 10, disk_without_field},
        {2, "disk h=(-0.01,0) minimizer", 120, disk_with_field},
        {3, "conformal quadrature disk reduction", 5, disk_reduction},
        {4, "punctured-energy limit", 60, punctured_limit},
        {5, "singular quadrature identities", 1, log_sin_identities},
        {6, "Poisson solver order", 10, solver_order},
        {7, "fixed point vs descent oracle", 120, picard_vs_descent},
        {8, "minimality under bump perturbations", 30, minimality},
        {9, "oval qualitative checks", 300, oval_qualitative},
        {10, "landscape determinism", 300, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = dt < c.budget_s;
        const bool pass = o.pass && in_time;
        failed += pass ? 0 : 1;
        fmt::print("{} [{}] {}: {}; {:.2f} s (< {} s{})\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail, dt,
                   c.budget_s, in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
