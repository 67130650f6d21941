#pragma once

// External-field correction and magnetization assembly.
//
// theta solves -Lap theta = h . (i e^{i theta} M) in the disk with theta = 0
// on the boundary, by the fixed-point iteration theta_{n+1} = A[theta_n]
// started from theta_0 = 0. The correction is V = G(a; theta*), the total
// energy W = W0 + V, and the magnetization m = e^{i theta} M (composed with
// Psi and pushed forward on conformal domains).

#include "vortexfield/canonical.hpp"
#include "vortexfield/geom.hpp"
#include "vortexfield/parallel.hpp"
#include "vortexfield/poisson.hpp"
#include "vortexfield/renorm.hpp"

#include <cstdint>
#include <vector>

namespace vortexfield {

/// Constant in-plane applied field, already rescaled to the thin-film units.
struct ExternalField {
    double hx = 0.0;
    double hy = 0.0;

    [[nodiscard]] Vec2 vec() const { return {hx, hy}; }
    [[nodiscard]] double norm() const { return vec().norm(); }
    [[nodiscard]] bool is_zero() const { return hx == 0.0 && hy == 0.0; }
};

struct PicardOptions {
    double tol = 1e-9;  ///< stop when max |theta_{n+1} - theta_n| < tol
    int max_iter = 50;
    double h_max = 0.5;  ///< fields stronger than this are rejected up front
    Exec exec = Exec::parallel;
};

struct FixedPointReport {
    int iterations = 0;
    std::vector<double> changes;  ///< max |theta_{n+1} - theta_n| per iteration
    double residual = 0.0;        ///< max |-Lap_h theta - f(theta)| at the last iterate
    bool converged = false;
};

struct PicardResult {
    PolarField theta;
    FixedPointReport report;
};

/// Throws DomainError if |h| exceeds opts.h_max or the field is not finite.
void validate_field(ExternalField h, const PicardOptions& opts);

/// f(x) = h . (i e^{i theta(x)} M(x)) at every node.
PolarField picard_rhs(const PolarField& theta, const std::vector<Complex>& samples, ExternalField h,
                      Exec exec = Exec::parallel);

/// Runs the iteration with a prepared solver and canonical samples. Never
/// throws on non-convergence; the report says so.
PicardResult picard_solve(const PoissonSolver& solver, const std::vector<Complex>& samples,
                          ExternalField h, const PicardOptions& opts = {});

PicardResult picard_solve(const VortexConfig& a, ExternalField h, const GridSpec& grid,
                          const PicardOptions& opts = {});

/// V(a; h) = G(a; theta*). Throws ConvergenceError if the iteration does not converge.
double v_external(const VortexConfig& a, ExternalField h, const GridSpec& grid,
                  const PicardOptions& opts = {});

struct EnergySettings {
    GridSpec grid{};
    PicardOptions picard{};
    int boundary_nodes = 1024;  ///< trapezoid nodes for the conformal W0 integral
};

/// W = W0 + V. W0 is closed form on the disk and the boundary integral on
/// conformal domains; V is always computed on the disk with the disk
/// canonical map. Coincident vortices give total = +infinity without a
/// Picard solve. Throws ConvergenceError if V cannot be computed.
EnergyBreakdown total_energy(const ConformalDomain& domain, const VortexConfig& a, ExternalField h,
                             const EnergySettings& settings = {});

/// Same, reusing a prepared solver (grid taken from the solver).
EnergyBreakdown total_energy(const ConformalDomain& domain, const VortexConfig& a, ExternalField h,
                             const PoissonSolver& solver, const EnergySettings& settings);

/// theta at an arbitrary disk point: bilinear in (r, t) between cell
/// centres, linear to 0 at r = 1, and linear to the innermost ring mean at
/// the pole.
double interpolate_theta(const PolarField& theta, Complex x);

struct VectorFieldSample {
    double x = 0.0;
    double y = 0.0;
    double mx = 0.0;
    double my = 0.0;
};

/// Polar lattice in the disk variable, mapped through Phi.
struct SampleSpec {
    int rings = 12;              ///< rings at r = k / rings, k = 1..rings, plus the centre
    int spokes = 48;             ///< points on the outermost ring; inner rings scale with r
    double boundary_inset = 1e-9;
    double vortex_guard = 0.04;  ///< disk-variable distance below which samples are dropped
    double jitter = 0.0;         ///< random radial/angular perturbation, fraction of a lattice step
    std::uint64_t seed = 1;
};

/// Lattice points w = Phi(z) for the given spec (before vortex filtering).
std::vector<Complex> sample_lattice(const ConformalDomain& domain, const SampleSpec& spec);

struct FieldSamples {
    std::vector<VectorFieldSample> samples;
    int outside = 0;      ///< points rejected as outside the domain
    int near_vortex = 0;  ///< points rejected by the vortex guard
};

/// m*(w) = e^{i theta(Psi(w))} M*(w) at the given domain points.
FieldSamples magnetization_at(const ConformalDomain& domain, const VortexConfig& a,
                              const PolarField& theta, const std::vector<Complex>& points,
                              double vortex_guard = 0.04);

/// Solves for theta and samples m on the lattice of `sample`.
FieldSamples magnetization_field(const ConformalDomain& domain, const VortexConfig& a,
                                 ExternalField h, const EnergySettings& settings,
                                 const SampleSpec& sample);

}  // namespace vortexfield
