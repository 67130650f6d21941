#include "vortexfield/renorm.hpp"

#include "vortexfield/errors.hpp"
#include "vortexfield/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace vortexfield {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_pair(const VortexConfig& a, const char* what)
{
    if (!a.is_simple_pair()) {
        throw UnsupportedConfig(std::string(what) + ": needs two vortices of degree one");
    }
}

// A point of the unit disk near a boundary vortex at angle s, in local polar
// coordinates: distance r from the vortex, angle phi measured from the inward
// normal. Inside the disk iff |phi| < acos(r / 2).
Complex local_point(double s, double r, double phi)
{
    return std::polar(1.0, s) + std::polar(r, s + kPi + phi);
}

double half_opening(double r) { return std::acos(std::clamp(0.5 * r, -1.0, 1.0)); }

double grad_sq(const VortexConfig& a, Complex x)
{
    const Vec2 g = grad_phistar(a, x);
    return g.x * g.x + g.y * g.y;
}

// One outer quadrature node of the punctured-domain integral; the inner
// integral along it is independent of every other node.
struct Strip {
    enum class Kind { full_ring, cut_ring, near } kind;
    double coord;   // r (rings) or log distance (near)
    double weight;  // outer quadrature weight including the Jacobian
    int vortex;     // near strips only
};

double strip_value(const Strip& st, const VortexConfig& a, double r0, const PuncturedQuadrature& q,
                   int ring_points)
{
    const GaussRule g = gauss_legendre(q.order);
    auto gauss_arc = [&](double lo, double hi, auto&& f) {
        const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / q.panel_width)));
        const double h = (hi - lo) / panels;
        double s = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double mid = lo + (p + 0.5) * h;
            double ps = 0.0;
            for (std::size_t k = 0; k < g.nodes.size(); ++k) ps += g.weights[k] * f(mid + 0.5 * h * g.nodes[k]);
            s += 0.5 * h * ps;
        }
        return s;
    };

    switch (st.kind) {
    case Strip::Kind::full_ring: {
        const double r = st.coord;
        const double dt = 2.0 * kPi / ring_points;
        double s = 0.0;
        for (int k = 0; k < ring_points; ++k) s += grad_sq(a, std::polar(r, k * dt));
        return st.weight * s * dt * r;
    }
    case Strip::Kind::cut_ring: {
        const double r = st.coord;
        // Excluded arcs |r e^{it} - a_j| < r0, sorted by start angle.
        std::vector<std::pair<double, double>> cuts;
        const double c = (1.0 + r * r - r0 * r0) / (2.0 * r);
        const double beta = c >= 1.0 ? 0.0 : std::acos(std::max(c, -1.0));
        for (std::size_t j = 0; j < a.size(); ++j) {
            const double lo = a.angle(j) - beta;
            cuts.emplace_back(lo, lo + 2.0 * beta);
        }
        std::sort(cuts.begin(), cuts.end());
        double s = 0.0;
        auto f = [&](double t) { return grad_sq(a, std::polar(r, t)); };
        for (std::size_t j = 0; j < cuts.size(); ++j) {
            const double from = cuts[j].second;
            const double to = (j + 1 < cuts.size()) ? cuts[j + 1].first : cuts[0].first + 2.0 * kPi;
            if (to > from) s += gauss_arc(from, to, f);
        }
        return st.weight * s * r;
    }
    case Strip::Kind::near: {
        const double r = std::exp(st.coord);
        const double s_j = a.angle(st.vortex);
        const double alpha = half_opening(r);
        auto f = [&](double phi) { return grad_sq(a, local_point(s_j, r, phi)); };
        // r dr dphi with dr = r du
        return st.weight * gauss_arc(-alpha, alpha, f) * r * r;
    }
    }
    return 0.0;
}

}  // namespace

double w0_disk(const VortexConfig& a)
{
    require_pair(a, "w0_disk");
    if (a.degenerate()) return kInf;
    return -kPi * std::log(std::abs(a.position(0) - a.position(1)));
}

double w0_conformal(const ConformalDomain& domain, const VortexConfig& a, int nodes)
{
    require_pair(a, "w0_conformal");
    if (nodes < 64 || (nodes & (nodes - 1)) != 0) {
        throw DomainError("w0_conformal: node count must be a power of two >= 64");
    }
    if (a.degenerate()) return kInf;

    const double h = 2.0 * kPi / nodes;
    struct Anchor {
        Complex position;
        double angle;
        TurningDensity density;
    };
    std::vector<Anchor> anchors;
    for (std::size_t j = 0; j < a.size(); ++j) {
        anchors.push_back({a.position(j), a.angle(j), turning_density(domain, a.angle(j))});
    }

    double sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double t = k * h;
        const Complex z = std::polar(1.0, t);
        const double f = turning_density(domain, t).value;
        double term = f * std::log(std::abs(domain.dphi(z)));
        for (const auto& an : anchors) {
            const double dist = std::abs(z - an.position);
            if (dist < 1e-14) continue;  // subtracted integrand vanishes at the vortex
            const double g = f - an.density.value - an.density.derivative * std::sin(t - an.angle);
            term += g * std::log(dist);
        }
        sum += term;
    }
    return -kPi * std::log(std::abs(anchors[0].position - anchors[1].position)) + 0.5 * sum * h;
}

double punctured_energy(const VortexConfig& a, double rho, const PuncturedQuadrature& quad, Exec exec)
{
    if (a.size() < 2) throw UnsupportedConfig("punctured_energy: needs at least two vortices");
    const double sep = a.min_separation();
    if (!(rho > 0.0) || !(rho < 0.5 * sep)) {
        throw DomainError("punctured_energy: rho must lie in (0, half the vortex separation)");
    }
    // Radius of the local patches around each vortex.
    const double r0 = std::max(rho, std::min(0.5, 0.45 * sep));
    const double width = std::min(quad.panel_width, 0.5 * r0);
    PuncturedQuadrature q = quad;
    q.panel_width = width;
    int ring_points = std::max(quad.ring_points, static_cast<int>(std::ceil(64.0 / r0)));
    ring_points += ring_points % 2;

    const GaussRule g = gauss_legendre(quad.order);
    std::vector<Strip> strips;
    auto add_panels = [&](double lo, double hi, double step, auto&& make) {
        const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / step)));
        const double h = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = lo + (p + 0.5) * h;
            for (std::size_t k = 0; k < g.nodes.size(); ++k) {
                make(mid + 0.5 * h * g.nodes[k], 0.5 * h * g.weights[k]);
            }
        }
    };

    // Rings fully inside B_{1 - r0}.
    add_panels(0.0, 1.0 - r0, width, [&](double r, double w) {
        strips.push_back({Strip::Kind::full_ring, r, w, -1});
    });
    // Rings crossing the local patches; r = 1 - r0 + r0 v^2 removes the
    // square-root onset of the cut arcs at r = 1 - r0.
    add_panels(0.0, 1.0, 0.125, [&](double v, double w) {
        strips.push_back({Strip::Kind::cut_ring, 1.0 - r0 + r0 * v * v, w * 2.0 * r0 * v, -1});
    });
    if (r0 > rho) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            add_panels(std::log(rho), std::log(r0), quad.panel_width, [&](double u, double w) {
                strips.push_back({Strip::Kind::near, u, w, static_cast<int>(j)});
            });
        }
    }

    std::vector<double> values(strips.size(), 0.0);
    const auto n = static_cast<std::ptrdiff_t>(strips.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::parallel)
    for (std::ptrdiff_t s = 0; s < n; ++s) values[s] = strip_value(strips[s], a, r0, q, ring_points);

    double total = 0.0;
    for (double v : values) total += v;
    return total;
}

std::vector<Complex> canonical_samples(const VortexConfig& a, const GridSpec& grid)
{
    grid.validate();
    std::vector<Complex> out(grid.size());
    for (int i = 0; i < grid.n_r; ++i) {
        const double r = grid.radius(i);
        for (int k = 0; k < grid.n_t; ++k) {
            out[grid.index(i, k)] = canonical_map_disk(a, std::polar(r, grid.angle(k)));
        }
    }
    return out;
}

double g_functional(const PolarField& theta, const std::vector<Complex>& samples, Vec2 h)
{
    const GridSpec& grid = theta.grid();
    if (samples.size() != grid.size()) throw DomainError("g_functional: sample/grid mismatch");
    PolarField coupling(grid);
    auto out = coupling.values();
    const auto th = theta.values();
    for (std::size_t n = 0; n < out.size(); ++n) {
        const Complex m = std::polar(1.0, th[n]) * samples[n];
        out[n] = h.x * m.real() + h.y * m.imag();
    }
    return gradient_energy(theta) - integrate_disk(coupling);
}

double g_functional(const VortexConfig& a, const PolarField& theta, Vec2 h)
{
    return g_functional(theta, canonical_samples(a, theta.grid()), h);
}

double trace_ratio(const std::function<double(Complex)>& u,
                   const std::function<Vec2(Complex)>& grad_u, Complex a_j, double rho)
{
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError("trace_ratio: rho must lie in (0, 1)");
    const double s = std::arg(a_j);
    const double alpha = half_opening(rho);
    const double arc = rho * integrate_gauss(
                                 [&](double phi) {
                                     const double v = u(local_point(s, rho, phi));
                                     return v * v;
                                 },
                                 -alpha, alpha, 8, 16);
    const double annulus = integrate_gauss(
        [&](double logr) {
            const double r = std::exp(logr);
            const double al = half_opening(r);
            return r * r * integrate_gauss(
                               [&](double phi) {
                                   const Vec2 gr = grad_u(local_point(s, r, phi));
                                   return gr.x * gr.x + gr.y * gr.y;
                               },
                               -al, al, 8, 16);
        },
        std::log(rho), std::log(2.0 * rho), 4, 16);
    return arc / (rho * annulus);
}

}  // namespace vortexfield
