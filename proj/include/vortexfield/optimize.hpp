#pragma once

// Minimization of the renormalized energy over the vortex angles
// (s1, s2) in the torus [0, 2pi)^2: Nelder-Mead local search, exhaustive
// landscape scans, and a refined grid search used as the oracle for the
// simplex method.

#include "vortexfield/geom.hpp"
#include "vortexfield/micromag.hpp"
#include "vortexfield/parallel.hpp"

#include <array>
#include <functional>
#include <vector>

namespace vortexfield {

struct AnglePair {
    double s1 = 0.0;
    double s2 = 0.0;
};

/// Objective on the torus; may return +infinity. Exceptions thrown by an
/// objective are treated as +infinity by the callers below.
using Objective = std::function<double(AnglePair)>;

struct NelderMeadOptions {
    double initial_step = 0.25;  ///< simplex edge along each axis (radians)
    double tol_x = 1e-6;         ///< max torus distance of the vertices from the best one
    double tol_f = 1e-6;         ///< max value spread
    int max_evals = 500;
};

struct SimplexVertex {
    AnglePair s;
    double value = 0.0;
};

struct SimplexState {
    std::array<SimplexVertex, 3> vertices{};  ///< sorted by value, best first
    int reflections = 0;
    int expansions = 0;
    int contractions = 0;
    int shrinks = 0;
    int evaluations = 0;
    int iterations = 0;
    std::vector<double> best_history;  ///< best value after each iteration
    bool converged = false;
};

struct NelderMeadResult {
    AnglePair s;
    double value = 0.0;
    SimplexState state;
};

/// Nelder-Mead with reflection 1, expansion 2, contraction 1/2, shrink 1/2.
/// Vertices are unwrapped around the best vertex before each step and wrapped
/// back into [0, 2pi) afterwards. +infinity always ranks worst.
NelderMeadResult nelder_mead(const Objective& objective, AnglePair s0,
                             const NelderMeadOptions& opts = {});

struct LandscapeGrid {
    int n = 0;
    std::vector<double> energy;  ///< row-major, energy[i * n + j] = W(s1 = angle(i), s2 = angle(j))
    int failures = 0;            ///< cells whose evaluation threw
    int argmin_i = -1;
    int argmin_j = -1;
    double min_value = 0.0;

    [[nodiscard]] double angle(int i) const;
    [[nodiscard]] double at(int i, int j) const { return energy[static_cast<std::size_t>(i) * n + j]; }
    [[nodiscard]] AnglePair argmin() const { return {angle(argmin_i), angle(argmin_j)}; }
};

/// Evaluates `objective` on the n x n grid; diagonal cells are +infinity.
/// The argmin is the first minimal cell in row-major order.
LandscapeGrid landscape(const Objective& objective, int n, Exec exec = Exec::parallel);

/// Total energy objective (see total_energy) sharing one Poisson solver.
Objective make_energy_objective(const ConformalDomain& domain, ExternalField h,
                                const EnergySettings& settings = {});

/// Energy landscape for a domain and field. Throws DomainError for n < 16.
LandscapeGrid landscape(const ConformalDomain& domain, ExternalField h, int n,
                        const EnergySettings& settings = {}, Exec exec = Exec::parallel);

struct OracleResult {
    AnglePair s;
    double value = 0.0;
    double refined_step = 0.0;  ///< spacing of the local refinement grid
};

/// Exhaustive argmin over the landscape, refined once on a 21 x 21 grid with
/// one tenth of the coarse spacing centred on the coarse argmin.
OracleResult grid_oracle(const Objective& objective, int n, Exec exec = Exec::parallel);

/// Throws DomainError for n < 32.
OracleResult grid_oracle(const ConformalDomain& domain, ExternalField h, int n,
                         const EnergySettings& settings = {}, Exec exec = Exec::parallel);

}  // namespace vortexfield
