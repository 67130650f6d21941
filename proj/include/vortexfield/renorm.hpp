#pragma once

// Unperturbed renormalized energy W0 of two boundary vortices, the
// punctured-domain Dirichlet energy it renormalizes, and the functional
//
//     G(a; theta) = int 1/2 |grad theta|^2 - h . (e^{i theta} M(x; a)) dx
//
// whose minimum over theta in H^1_0 is the external-field correction.

#include "vortexfield/canonical.hpp"
#include "vortexfield/geom.hpp"
#include "vortexfield/parallel.hpp"
#include "vortexfield/poisson.hpp"

#include <functional>
#include <vector>

namespace vortexfield {

struct EnergyBreakdown {
    double w0 = 0.0;
    double v_ext = 0.0;
    double total = 0.0;  ///< w0 + v_ext
    int iterations = 0;
    double residual = 0.0;
    bool converged = true;
    int boundary_nodes = 0;
    int grid_nodes = 0;
};

/// -pi log|a1 - a2|; +infinity for coincident vortices.
double w0_disk(const VortexConfig& a);

/// W0 on the image of the disk under a conformal map:
///
///   -pi log|a1 - a2| + 1/2 int_{|z|=1} f(z) (log|z - a1| + log|z - a2| + log|Phi'(z)|) |dz|,
///
/// f = kappa(Phi(z)) |Phi'(z)|. Periodic trapezoid rule on `nodes` points;
/// each log|z - a_j| term is integrated against f - f(a_j) - f'(a_j) sin(t - s_j),
/// using that both subtracted pieces integrate to zero against log|z - a_j|.
/// `nodes` must be a power of two >= 64. +infinity for coincident vortices.
double w0_conformal(const ConformalDomain& domain, const VortexConfig& a, int nodes = 1024);

/// Panel layout for punctured_energy.
struct PuncturedQuadrature {
    int order = 16;             ///< Gauss-Legendre points per panel
    double panel_width = 0.25;  ///< max panel length (radians, radius, or log-radius)
    int ring_points = 512;      ///< trapezoid points on full rings away from the vortices
};

/// int_{B1 \ U_j B_rho(a_j)} |grad phi*|^2 dx.
///
/// Near each vortex the integral is taken in local polar coordinates
/// (log distance, angle) with the exact angular limits of the disk; the rest
/// of the disk in polar coordinates about the origin with the exact excluded
/// arcs. Throws DomainError unless 0 < rho < half the minimal separation.
double punctured_energy(const VortexConfig& a, double rho, const PuncturedQuadrature& quad = {},
                        Exec exec = Exec::parallel);

/// M(x; a) at every node of `grid` (disk canonical map).
std::vector<Complex> canonical_samples(const VortexConfig& a, const GridSpec& grid);

/// Discrete G on the disk grid of `theta` with M taken from `samples`.
double g_functional(const PolarField& theta, const std::vector<Complex>& samples, Vec2 h);

/// Discrete G, sampling M from `a`.
double g_functional(const VortexConfig& a, const PolarField& theta, Vec2 h);

/// int_{Omega cap dB_rho(a_j)} u^2 dS / (rho int_{Omega cap (B_{2 rho} \ B_rho)(a_j)} |grad u|^2 dx)
/// for a vortex a_j on the unit circle.
double trace_ratio(const std::function<double(Complex)>& u,
                   const std::function<Vec2(Complex)>& grad_u, Complex a_j, double rho);

}  // namespace vortexfield
