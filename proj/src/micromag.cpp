#include "vortexfield/micromag.hpp"

#include "vortexfield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace vortexfield {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

void validate_field(ExternalField h, const PicardOptions& opts)
{
    if (!std::isfinite(h.hx) || !std::isfinite(h.hy)) throw DomainError("external field is not finite");
    if (h.norm() > opts.h_max) {
        throw DomainError("external field magnitude " + std::to_string(h.norm()) +
                          " exceeds the bound h_max = " + std::to_string(opts.h_max));
    }
}

PolarField picard_rhs(const PolarField& theta, const std::vector<Complex>& samples, ExternalField h,
                      Exec exec)
{
    const GridSpec& grid = theta.grid();
    if (samples.size() != grid.size()) throw DomainError("picard_rhs: sample/grid mismatch");
    PolarField f(grid);
    auto out = f.values();
    const auto th = theta.values();
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        // i e^{i theta} M, read as a vector in R^2
        const Complex rotated = Complex(0.0, 1.0) * std::polar(1.0, th[j]) * samples[j];
        out[j] = h.hx * rotated.real() + h.hy * rotated.imag();
    }
    return f;
}

PicardResult picard_solve(const PoissonSolver& solver, const std::vector<Complex>& samples,
                          ExternalField h, const PicardOptions& opts)
{
    validate_field(h, opts);
    if (opts.max_iter < 1) throw DomainError("picard_solve: max_iter must be >= 1");
    PicardResult result{PolarField(solver.grid()), {}};
    auto& report = result.report;
    for (int n = 0; n < opts.max_iter; ++n) {
        PolarField next = solver.solve(picard_rhs(result.theta, samples, h, opts.exec), opts.exec);
        const double change = max_abs_difference(next, result.theta);
        result.theta = std::move(next);
        report.changes.push_back(change);
        report.iterations = n + 1;
        if (change < opts.tol) {
            report.converged = true;
            break;
        }
    }
    const PolarField lhs = solver.apply(result.theta);
    report.residual = max_abs_difference(lhs, picard_rhs(result.theta, samples, h, opts.exec));
    return result;
}

PicardResult picard_solve(const VortexConfig& a, ExternalField h, const GridSpec& grid,
                          const PicardOptions& opts)
{
    const PoissonSolver solver(grid);
    return picard_solve(solver, canonical_samples(a, grid), h, opts);
}

double v_external(const VortexConfig& a, ExternalField h, const GridSpec& grid,
                  const PicardOptions& opts)
{
    const PoissonSolver solver(grid);
    const auto samples = canonical_samples(a, grid);
    const PicardResult res = picard_solve(solver, samples, h, opts);
    if (!res.report.converged) {
        throw ConvergenceError("v_external: fixed-point iteration did not converge in " +
                               std::to_string(opts.max_iter) + " iterations");
    }
    return g_functional(res.theta, samples, h.vec());
}

EnergyBreakdown total_energy(const ConformalDomain& domain, const VortexConfig& a, ExternalField h,
                             const PoissonSolver& solver, const EnergySettings& settings)
{
    EnergyBreakdown e;
    e.boundary_nodes = domain.is_disk() ? 0 : settings.boundary_nodes;
    e.grid_nodes = static_cast<int>(solver.grid().size());
    if (a.degenerate()) {
        e.w0 = std::numeric_limits<double>::infinity();
        e.total = e.w0;
        return e;
    }
    e.w0 = domain.is_disk() ? w0_disk(a) : w0_conformal(domain, a, settings.boundary_nodes);
    if (h.is_zero()) {
        // theta* = 0 exactly.
        e.v_ext = 0.0;
    } else {
        const auto samples = canonical_samples(a, solver.grid());
        const PicardResult res = picard_solve(solver, samples, h, settings.picard);
        e.iterations = res.report.iterations;
        e.residual = res.report.residual;
        e.converged = res.report.converged;
        if (!e.converged) throw ConvergenceError("total_energy: fixed-point iteration did not converge");
        e.v_ext = g_functional(res.theta, samples, h.vec());
    }
    e.total = e.w0 + e.v_ext;
    return e;
}

EnergyBreakdown total_energy(const ConformalDomain& domain, const VortexConfig& a, ExternalField h,
                             const EnergySettings& settings)
{
    const PoissonSolver solver(settings.grid);
    return total_energy(domain, a, h, solver, settings);
}

double interpolate_theta(const PolarField& theta, Complex x)
{
    const GridSpec& g = theta.grid();
    const double r = std::min(std::abs(x), 1.0);
    const double t = wrap_angle(std::arg(x));
    const double kf = t / g.dt();
    const double kfloor = std::floor(kf);
    const double wt = kf - kfloor;
    const int k0 = static_cast<int>(kfloor) % g.n_t;
    const int k1 = (k0 + 1) % g.n_t;
    auto ring = [&](int i) { return (1.0 - wt) * theta(i, k0) + wt * theta(i, k1); };

    const double pos = r / g.dr() - 0.5;
    if (pos >= g.n_r - 1) {
        const double r_last = g.radius(g.n_r - 1);
        return ring(g.n_r - 1) * (1.0 - r) / (1.0 - r_last);
    }
    if (pos < 0.0) {
        double mean = 0.0;
        for (int k = 0; k < g.n_t; ++k) mean += theta(0, k);
        mean /= g.n_t;
        const double w = r / g.radius(0);
        return (1.0 - w) * mean + w * ring(0);
    }
    const int i0 = static_cast<int>(std::floor(pos));
    const double wr = pos - i0;
    return (1.0 - wr) * ring(i0) + wr * ring(i0 + 1);
}

std::vector<Complex> sample_lattice(const ConformalDomain& domain, const SampleSpec& spec)
{
    if (spec.rings < 1 || spec.spokes < 4) throw DomainError("sample lattice: need rings >= 1, spokes >= 4");
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    std::vector<Complex> points;
    points.push_back(domain.phi(0.0));
    const double dr = 1.0 / spec.rings;
    for (int k = 1; k <= spec.rings; ++k) {
        const bool outer = k == spec.rings;
        double r = outer ? 1.0 - spec.boundary_inset : k * dr;
        const int count = std::max(6, static_cast<int>(std::lround(spec.spokes * static_cast<double>(k) / spec.rings)));
        const double dt = kTwoPi / count;
        for (int j = 0; j < count; ++j) {
            double t = j * dt;
            double rr = r;
            if (spec.jitter > 0.0) {
                t += spec.jitter * dt * unit(rng);
                if (!outer) rr += spec.jitter * dr * unit(rng);
            }
            points.push_back(domain.phi(std::polar(rr, t)));
        }
    }
    return points;
}

FieldSamples magnetization_at(const ConformalDomain& domain, const VortexConfig& a,
                              const PolarField& theta, const std::vector<Complex>& points,
                              double vortex_guard)
{
    FieldSamples out;
    out.samples.reserve(points.size());
    for (const Complex& w : points) {
        if (!domain.contains(w)) {
            ++out.outside;
            continue;
        }
        const Complex z = domain.psi(w);
        bool near = false;
        for (std::size_t j = 0; j < a.size(); ++j) near = near || std::abs(z - a.position(j)) < vortex_guard;
        if (near) {
            ++out.near_vortex;
            continue;
        }
        Complex big_m = canonical_map_disk(a, z);
        if (!domain.is_disk()) {
            const Complex d = domain.dphi(z);
            big_m *= d / std::abs(d);
        }
        const Complex m = std::polar(1.0, interpolate_theta(theta, z)) * big_m;
        out.samples.push_back({w.real(), w.imag(), m.real(), m.imag()});
    }
    return out;
}

FieldSamples magnetization_field(const ConformalDomain& domain, const VortexConfig& a,
                                 ExternalField h, const EnergySettings& settings,
                                 const SampleSpec& sample)
{
    if (a.degenerate()) throw UnsupportedConfig("magnetization_field: coincident vortices");
    PolarField theta(settings.grid);
    if (!h.is_zero()) {
        PicardResult res = picard_solve(a, h, settings.grid, settings.picard);
        if (!res.report.converged) throw ConvergenceError("magnetization_field: fixed-point iteration did not converge");
        theta = std::move(res.theta);
    }
    return magnetization_at(domain, a, theta, sample_lattice(domain, sample), sample.vortex_guard);
}

}  // namespace vortexfield
