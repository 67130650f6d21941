#include "app/verify.hpp"

#include "app/output.hpp"
#include "oracles/descent.hpp"
#include "vortexfield/micromag.hpp"
#include "vortexfield/optimize.hpp"
#include "vortexfield/quadrature.hpp"
#include "vortexfield/renorm.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

namespace vortexfield::app {

namespace {

constexpr double kPi = std::numbers::pi;

using Checks = std::vector<CheckResult>;

void near(Checks& out, const std::string& group, const std::string& name, double measured, double reference,
          double tol)
{
    out.push_back({group, name, "abs", measured, reference, tol, std::abs(measured - reference) <= tol});
}

void at_most(Checks& out, const std::string& group, const std::string& name, double measured, double bound)
{
    out.push_back({group, name, "at_most", measured, bound, 0.0, measured <= bound});
}

void at_least(Checks& out, const std::string& group, const std::string& name, double measured, double bound)
{
    out.push_back({group, name, "at_least", measured, bound, 0.0, measured >= bound});
}

void quadrature(Checks& out)
{
    const double l2 = std::log(2.0);
    near(out, "quadrature", "log_sin", singular_quadrature_1d(LogSinIntegral::log_sin), -0.5 * kPi * l2, 1e-6);
    near(out, "quadrature", "log_sin_squared", singular_quadrature_1d(LogSinIntegral::log_sin_squared),
         0.5 * kPi * (l2 * l2 + kPi * kPi / 12.0), 1e-6);
}

void geometry(Checks& out)
{
    const auto oval = ConformalDomain::oval(0.2);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
        const Complex z = std::polar(std::sqrt(u(rng)), 2.0 * kPi * u(rng));
        worst = std::max(worst, std::abs(conformal_inverse(oval, conformal_forward(oval, z)) - z));
    }
    at_most(out, "geometry", "inverse_round_trip", worst, 1e-12);

    double turning = 0.0;
    for (int k = 0; k < 4096; ++k) turning += turning_density(oval, 2.0 * kPi * k / 4096).value;
    near(out, "geometry", "total_turning", turning * 2.0 * kPi / 4096, 2.0 * kPi, 1e-8);

    const double h = 1e-4;
    auto gamma = [&](double s) { return oval.phi(std::polar(1.0, s)); };
    const Complex d1 = (gamma(h) - gamma(-h)) / (2.0 * h);
    const Complex d2 = (gamma(h) - 2.0 * gamma(0.0) + gamma(-h)) / (h * h);
    const double fd = (d2 * std::conj(d1)).imag() / std::pow(std::abs(d1), 3);
    const double kappa = boundary_curvature(oval, 0.0);
    near(out, "geometry", "curvature_vs_finite_difference", kappa, fd, 1e-6 * std::abs(fd));
}

void conformal(Checks& out)
{
    const auto disk = ConformalDomain::disk();
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const auto a = VortexConfig::pair(ang(rng), ang(rng));
        worst = std::max(worst, std::abs(w0_conformal(disk, a, 1024) - w0_disk(a)));
    }
    at_most(out, "conformal", "disk_reduction", worst, 1e-6);

    const auto oval = ConformalDomain::oval(0.2);
    const auto a = VortexConfig::pair(0.0, kPi);
    at_most(out, "conformal", "node_doubling", std::abs(w0_conformal(oval, a, 2048) - w0_conformal(oval, a, 4096)),
            1e-6);
    const auto b = VortexConfig::pair(0.7, 2.1);
    const auto b_conj = VortexConfig::pair(wrap_angle(-0.7), wrap_angle(-2.1));
    at_most(out, "conformal", "conjugation_symmetry", std::abs(w0_conformal(oval, b) - w0_conformal(oval, b_conj)),
            1e-9);
}

void punctured(Checks& out)
{
    const auto a = VortexConfig::pair(0.0, kPi);
    auto renormalized = [&](double rho) { return punctured_energy(a, rho) - 2.0 * kPi * std::log(1.0 / rho); };
    const double e1 = renormalized(0.1), e2 = renormalized(0.05), e3 = renormalized(0.025);
    at_most(out, "punctured", "ladder_monotone", std::max(e2 - e1, e3 - e2), 0.0);
    // The remainder is O(rho); one Richardson step removes it.
    near(out, "punctured", "richardson_limit", 2.0 * e3 - e2, 2.0 * w0_disk(a), 5e-2);

    const double rhos[] = {0.025, 0.0125, 0.00625};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double r : rhos) {
        const double x = std::log(1.0 / r), y = punctured_energy(a, r);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
    near(out, "punctured", "divergence_rate", slope, 2.0 * kPi, 0.03 * 2.0 * kPi);
}

void poisson(Checks& out)
{
    auto order = [](auto f, auto exact) {
        double worst = 1e300;
        double prev = 0.0;
        for (int n = 16; n <= 64; n *= 2) {
            const GridSpec g{n, 2 * n};
            const double e = max_abs_difference(solve_dirichlet(PolarField::sample(g, f)), PolarField::sample(g, exact));
            if (n > 16) worst = std::min(worst, std::log2(prev / e));
            prev = e;
        }
        return worst;
    };
    at_least(out, "poisson", "order_parabola",
             order([](double, double) { return 4.0; }, [](double r, double) { return 1.0 - r * r; }), 1.9);
    at_least(out, "poisson", "order_first_mode",
             order([](double r, double t) { return 8.0 * r * std::cos(t); },
                   [](double r, double t) { return (r - r * r * r) * std::cos(t); }),
             1.9);

    const GridSpec g{24, 48};
    const PoissonSolver solver(g);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const PolarField f = PolarField::sample(g, [&](double, double) { return u(rng); });
    at_most(out, "poisson", "fft_vs_reference", max_abs_difference(solver.solve(f), solver.solve_reference(f)), 1e-12);
}

void picard(Checks& out)
{
    const GridSpec g{32, 64};
    struct Case {
        VortexConfig a;
        ExternalField h;
    };
    const Case cases[] = {{VortexConfig::pair(0.0, kPi), {0.0, 0.01}},
                          {VortexConfig::pair(0.5, 2.5), {-0.01, 0.0}},
                          {VortexConfig::pair(1.0, 4.0), {0.05, -0.08}}};
    double worst = 0.0;
    double margin = 1e300;
    for (const auto& c : cases) {
        const auto samples = canonical_samples(c.a, g);
        const PicardResult p = picard_solve(c.a, c.h, g);
        const oracle::DescentResult d = oracle::minimize_g(g, samples, c.h.vec());
        worst = std::max(worst, (p.report.converged && d.converged) ? max_abs_difference(p.theta, d.theta) : 1e300);

        const double g_star = g_functional(p.theta, samples, c.h.vec());
        const PolarField bumps[] = {
            PolarField::sample(g, [](double r, double) { return 1.0 - r * r; }),
            PolarField::sample(g, [](double r, double t) { return (r - r * r * r) * std::cos(t); }),
            PolarField::sample(g, [](double r, double t) { return r * r * (1.0 - r) * std::sin(2.0 * t); })};
        for (const auto& b : bumps) {
            for (double eps : {-0.3, -0.1, 0.1, 0.3}) {
                PolarField q = p.theta;
                for (std::size_t n = 0; n < q.values().size(); ++n) q.values()[n] += eps * b.values()[n];
                margin = std::min(margin, g_functional(q, samples, c.h.vec()) - g_star);
            }
        }
    }
    at_most(out, "picard", "descent_oracle_agreement", worst, 1e-6);
    at_least(out, "picard", "minimality_margin", margin, -1e-10);

    const PicardResult r = picard_solve(VortexConfig::pair(0.0, kPi), {-0.01, 0.0}, GridSpec{});
    double ratio = r.report.converged ? 0.0 : 1e300;
    for (std::size_t n = 1; n < r.report.changes.size(); ++n) {
        ratio = std::max(ratio, r.report.changes[n] / r.report.changes[n - 1]);
    }
    at_most(out, "picard", "contraction_ratio", ratio, 0.9);
}

void optimize(Checks& out)
{
    const NelderMeadResult r = nelder_mead(make_energy_objective(ConformalDomain::disk(), {0.0, 0.0}), {0.5, 2.5});
    near(out, "optimize", "disk_separation", std::abs(angle_difference(r.s.s1, r.s.s2)), kPi, 1e-3);
    near(out, "optimize", "disk_minimum", r.value, -kPi * std::log(2.0), 1e-4);

    const NelderMeadResult rh =
        nelder_mead(make_energy_objective(ConformalDomain::disk(), {-0.01, 0.0}), {0.5, 2.5});
    near(out, "optimize", "disk_field_s1", angle_difference(0.0, rh.s.s1), 0.0, 0.05);
    near(out, "optimize", "disk_field_s2", angle_difference(kPi, rh.s.s2), 0.0, 0.05);
}

const std::map<std::string, std::function<void(Checks&)>>& registry()
{
    static const std::map<std::string, std::function<void(Checks&)>> r = {
        {"quadrature", quadrature}, {"geometry", geometry}, {"conformal", conformal}, {"punctured", punctured},
        {"poisson", poisson},       {"picard", picard},     {"optimize", optimize}};
    return r;
}

}  // namespace

const std::vector<std::string>& verify_groups()
{
    static const std::vector<std::string> g = {"quadrature", "geometry", "conformal", "punctured",
                                               "poisson",    "picard",   "optimize"};
    return g;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& groups)
{
    Checks out;
    for (const auto& name : verify_groups()) {
        if (std::find(groups.begin(), groups.end(), name) != groups.end()) registry().at(name)(out);
    }
    return out;
}

std::string format_check(const CheckResult& c)
{
    std::string rule;
    if (c.relation == "abs") {
        rule = fmt::format("expected {:.10g} +- {:.3g}, error {:.3g}", c.reference, c.tolerance,
                           std::abs(c.measured - c.reference));
    } else {
        rule = fmt::format("{} {:.10g}", c.relation == "at_most" ? "bound <=" : "bound >=", c.reference);
    }
    return fmt::format("[{}] {}.{}: measured {:.10g}, {}", c.pass ? "PASS" : "FAIL", c.group, c.name, c.measured, rule);
}

nlohmann::ordered_json to_json(const std::vector<CheckResult>& checks)
{
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto& c : checks) {
        nlohmann::ordered_json j;
        j["group"] = c.group;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["relation"] = c.relation;
        j["measured"] = json_number(c.measured);
        j["reference"] = json_number(c.reference);
        if (c.relation == "abs") {
            j["tolerance"] = c.tolerance;
            j["error"] = json_number(std::abs(c.measured - c.reference));
        }
        list.push_back(j);
        all = all && c.pass;
    }
    nlohmann::ordered_json out;
    out["all_pass"] = all;
    out["checks"] = list;
    return out;
}

}  // namespace vortexfield::app
