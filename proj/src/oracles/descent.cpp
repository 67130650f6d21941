#include "oracles/descent.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace vortexfield::oracle {

namespace {

double dot(const PolarField& a, const PolarField& b)
{
    double s = 0.0;
    const auto av = a.values();
    const auto bv = b.values();
    for (std::size_t n = 0; n < av.size(); ++n) s += av[n] * bv[n];
    return s;
}

}  // namespace

double discrete_g(const PolarField& theta, const std::vector<Complex>& samples, Vec2 h)
{
    const GridSpec& g = theta.grid();
    const double dr = g.dr();
    const double dt = g.dt();
    double energy = 0.0;
    for (int i = 0; i < g.n_r; ++i) {
        const double r = g.radius(i);
        for (int k = 0; k < g.n_t; ++k) {
            const double u = theta(i, k);
            if (i + 1 < g.n_r) {
                const double d = theta(i + 1, k) - u;
                energy += 0.5 * (dt / dr) * (i + 1) * dr * d * d;
            } else {
                // one-sided to the zero boundary value at distance dr / 2
                energy += (dt / dr) * u * u;
            }
            const double da = theta(i, (k + 1) % g.n_t) - u;
            energy += 0.5 * dr / (r * dt) * da * da;
            const Complex m = std::polar(1.0, u) * samples[g.index(i, k)];
            energy -= r * dr * dt * (h.x * m.real() + h.y * m.imag());
        }
    }
    return energy;
}

PolarField discrete_g_gradient(const PolarField& theta, const std::vector<Complex>& samples, Vec2 h)
{
    const GridSpec& g = theta.grid();
    const double dr = g.dr();
    const double dt = g.dt();
    PolarField grad(g);
    for (int i = 0; i < g.n_r; ++i) {
        const double r = g.radius(i);
        for (int k = 0; k < g.n_t; ++k) {
            const double u = theta(i, k);
            if (i + 1 < g.n_r) {
                const double flux = (dt / dr) * (i + 1) * dr * (theta(i + 1, k) - u);
                grad(i, k) -= flux;
                grad(i + 1, k) += flux;
            } else {
                grad(i, k) += 2.0 * (dt / dr) * u;
            }
            const int kn = (k + 1) % g.n_t;
            const double flux = dr / (r * dt) * (theta(i, kn) - u);
            grad(i, k) -= flux;
            grad(i, kn) += flux;
            const Complex dm = Complex(0.0, 1.0) * std::polar(1.0, u) * samples[g.index(i, k)];
            grad(i, k) -= r * dr * dt * (h.x * dm.real() + h.y * dm.imag());
        }
    }
    return grad;
}

DescentResult minimize_g(const GridSpec& grid, const std::vector<Complex>& samples, Vec2 h,
                         const DescentOptions& opts)
{
    DescentResult res{PolarField(grid), 0, 0.0, false};
    PolarField& x = res.theta;
    double fx = discrete_g(x, samples, h);
    PolarField gx = discrete_g_gradient(x, samples, h);
    double gg = dot(gx, gx);
    std::deque<double> recent{fx};
    double alpha = 1.0 / std::max(1.0, std::sqrt(gg));

    for (int it = 0; it < opts.max_iter; ++it) {
        res.grad_norm = std::sqrt(gg);
        if (res.grad_norm < opts.grad_tol) {
            res.converged = true;
            break;
        }
        const double reference = *std::max_element(recent.begin(), recent.end());
        PolarField trial(grid);
        double ft = 0.0;
        for (int back = 0; back < 60; ++back) {
            auto tv = trial.values();
            const auto xv = x.values();
            const auto gv = gx.values();
            for (std::size_t n = 0; n < tv.size(); ++n) tv[n] = xv[n] - alpha * gv[n];
            ft = discrete_g(trial, samples, h);
            if (ft <= reference - 1e-4 * alpha * gg) break;
            alpha *= 0.5;
        }
        PolarField gt = discrete_g_gradient(trial, samples, h);
        // Barzilai-Borwein step from s = x_{k+1} - x_k, y = g_{k+1} - g_k.
        double sy = 0.0;
        double ss = 0.0;
        {
            const auto tv = trial.values();
            const auto xv = x.values();
            const auto gtv = gt.values();
            const auto gv = gx.values();
            for (std::size_t n = 0; n < tv.size(); ++n) {
                const double s = tv[n] - xv[n];
                sy += s * (gtv[n] - gv[n]);
                ss += s * s;
            }
        }
        alpha = sy > 0.0 ? ss / sy : 1.0 / std::max(1.0, std::sqrt(gg));
        x = std::move(trial);
        gx = std::move(gt);
        fx = ft;
        gg = dot(gx, gx);
        recent.push_back(fx);
        if (static_cast<int>(recent.size()) > opts.memory) recent.pop_front();
        res.iterations = it + 1;
    }
    res.grad_norm = std::sqrt(gg);
    res.converged = res.grad_norm < opts.grad_tol;
    return res;
}

}  // namespace vortexfield::oracle
