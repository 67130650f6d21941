#include "vortexfield/optimize.hpp"

#include "vortexfield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

namespace vortexfield {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_eval(const Objective& f, AnglePair s)
{
    try {
        const double v = f(s);
        return std::isnan(v) ? kInf : v;
    } catch (const std::exception&) {
        return kInf;
    }
}

AnglePair wrap(AnglePair s) { return {wrap_angle(s.s1), wrap_angle(s.s2)}; }

double torus_distance(AnglePair a, AnglePair b)
{
    return std::hypot(angle_difference(a.s1, b.s1), angle_difference(a.s2, b.s2));
}

// a + t (b - a) in unwrapped coordinates.
AnglePair lerp(AnglePair a, AnglePair b, double t)
{
    return {a.s1 + t * (b.s1 - a.s1), a.s2 + t * (b.s2 - a.s2)};
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& objective, AnglePair s0, const NelderMeadOptions& opts)
{
    SimplexState st;
    auto eval = [&](AnglePair s) {
        ++st.evaluations;
        return safe_eval(objective, s);
    };
    auto& v = st.vertices;
    const AnglePair start[3] = {s0, {s0.s1 + opts.initial_step, s0.s2}, {s0.s1, s0.s2 + opts.initial_step}};
    for (int i = 0; i < 3; ++i) {
        v[i].s = wrap(start[i]);
        v[i].value = eval(v[i].s);
    }
    auto order = [&] {
        std::stable_sort(v.begin(), v.end(),
                         [](const SimplexVertex& a, const SimplexVertex& b) { return a.value < b.value; });
    };

    for (;;) {
        order();
        st.best_history.push_back(v[0].value);
        bool small = std::isfinite(v[2].value);
        for (int i = 1; i < 3 && small; ++i) {
            small = torus_distance(v[0].s, v[i].s) <= opts.tol_x &&
                    std::abs(v[i].value - v[0].value) <= opts.tol_f;
        }
        if (small) {
            st.converged = true;
            break;
        }
        if (st.evaluations >= opts.max_evals) break;
        ++st.iterations;

        // Unwrap around the best vertex so the simplex is a plain triangle.
        AnglePair p[3];
        p[0] = v[0].s;
        for (int i = 1; i < 3; ++i) {
            p[i] = {p[0].s1 + angle_difference(p[0].s1, v[i].s.s1),
                    p[0].s2 + angle_difference(p[0].s2, v[i].s.s2)};
        }
        const AnglePair c = lerp(p[0], p[1], 0.5);
        const AnglePair xr = lerp(c, p[2], -1.0);
        const double fr = eval(wrap(xr));

        auto accept = [&](AnglePair x, double fx) {
            v[2].s = wrap(x);
            v[2].value = fx;
        };

        if (fr < v[0].value) {
            const AnglePair xe = lerp(c, p[2], -2.0);
            const double fe = eval(wrap(xe));
            if (fe < fr) {
                accept(xe, fe);
                ++st.expansions;
            } else {
                accept(xr, fr);
                ++st.reflections;
            }
            continue;
        }
        if (fr < v[1].value) {
            accept(xr, fr);
            ++st.reflections;
            continue;
        }
        bool shrink = false;
        if (fr < v[2].value) {
            const AnglePair xc = lerp(c, xr, 0.5);
            const double fc = eval(wrap(xc));
            if (fc <= fr) {
                accept(xc, fc);
                ++st.contractions;
            } else {
                shrink = true;
            }
        } else {
            const AnglePair xcc = lerp(c, p[2], 0.5);
            const double fcc = eval(wrap(xcc));
            if (fcc < v[2].value) {
                accept(xcc, fcc);
                ++st.contractions;
            } else {
                shrink = true;
            }
        }
        if (shrink) {
            ++st.shrinks;
            for (int i = 1; i < 3; ++i) {
                const AnglePair x = lerp(p[0], p[i], 0.5);
                v[i].s = wrap(x);
                v[i].value = eval(v[i].s);
            }
        }
    }
    return {v[0].s, v[0].value, st};
}

double LandscapeGrid::angle(int i) const { return kTwoPi * i / n; }

LandscapeGrid landscape(const Objective& objective, int n, Exec exec)
{
    if (n < 2) throw DomainError("landscape: resolution must be >= 2");
    LandscapeGrid g;
    g.n = n;
    g.energy.assign(static_cast<std::size_t>(n) * n, kInf);
    std::vector<char> failed(g.energy.size(), 0);
    const auto cells = static_cast<std::ptrdiff_t>(g.energy.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (std::ptrdiff_t c = 0; c < cells; ++c) {
        const int i = static_cast<int>(c / n);
        const int j = static_cast<int>(c % n);
        if (i == j) continue;  // coincident vortices
        try {
            g.energy[c] = objective({g.angle(i), g.angle(j)});
        } catch (const std::exception&) {
            failed[c] = 1;
        }
    }
    g.failures = static_cast<int>(std::count(failed.begin(), failed.end(), 1));
    g.min_value = kInf;
    for (std::ptrdiff_t c = 0; c < cells; ++c) {
        if (g.energy[c] < g.min_value) {
            g.min_value = g.energy[c];
            g.argmin_i = static_cast<int>(c / n);
            g.argmin_j = static_cast<int>(c % n);
        }
    }
    return g;
}

Objective make_energy_objective(const ConformalDomain& domain, ExternalField h,
                                const EnergySettings& settings)
{
    auto solver = std::make_shared<const PoissonSolver>(settings.grid);
    return [domain, h, settings, solver](AnglePair s) {
        return total_energy(domain, VortexConfig::pair(s.s1, s.s2), h, *solver, settings).total;
    };
}

LandscapeGrid landscape(const ConformalDomain& domain, ExternalField h, int n,
                        const EnergySettings& settings, Exec exec)
{
    if (n < 16) throw DomainError("landscape: resolution must be >= 16");
    return landscape(make_energy_objective(domain, h, settings), n, exec);
}

OracleResult grid_oracle(const Objective& objective, int n, Exec exec)
{
    const LandscapeGrid coarse = landscape(objective, n, exec);
    OracleResult best;
    best.refined_step = kTwoPi / n / 10.0;
    if (coarse.argmin_i < 0) {
        best.value = kInf;
        return best;
    }
    const AnglePair centre = coarse.argmin();
    constexpr int half = 10;
    constexpr int side = 2 * half + 1;
    std::vector<double> values(side * side, kInf);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (int c = 0; c < side * side; ++c) {
        const int di = c / side - half;
        const int dj = c % side - half;
        const AnglePair s = wrap({centre.s1 + di * best.refined_step, centre.s2 + dj * best.refined_step});
        values[c] = (di == 0 && dj == 0) ? coarse.min_value : safe_eval(objective, s);
    }
    best.s = centre;
    best.value = coarse.min_value;
    for (int c = 0; c < side * side; ++c) {
        if (values[c] < best.value) {
            best.value = values[c];
            best.s = wrap({centre.s1 + (c / side - half) * best.refined_step,
                           centre.s2 + (c % side - half) * best.refined_step});
        }
    }
    return best;
}

OracleResult grid_oracle(const ConformalDomain& domain, ExternalField h, int n,
                         const EnergySettings& settings, Exec exec)
{
    if (n < 32) throw DomainError("grid_oracle: resolution must be >= 32");
    return grid_oracle(make_energy_objective(domain, h, settings), n, exec);
}

}  // namespace vortexfield
