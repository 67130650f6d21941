#pragma once

// Brute-force minimizer of the discrete G functional, written against the
// energy alone (no Poisson solve, no fixed-point map). Used to cross-check
// the fixed-point solution.

#include "vortexfield/geom.hpp"
#include "vortexfield/poisson.hpp"

#include <vector>

namespace vortexfield::oracle {

struct DescentOptions {
    double grad_tol = 1e-8;  ///< Euclidean norm of the gradient over all nodes
    int max_iter = 200000;
    int memory = 10;  ///< non-monotone Armijo window
};

struct DescentResult {
    PolarField theta;
    int iterations = 0;
    double grad_norm = 0.0;
    bool converged = false;
};

/// Discrete G(theta) = 1/2 |grad theta|_h^2 - sum_n w_n h . (e^{i theta_n} M_n).
double discrete_g(const PolarField& theta, const std::vector<Complex>& samples, Vec2 h);

/// Gradient of discrete_g with respect to the node values.
PolarField discrete_g_gradient(const PolarField& theta, const std::vector<Complex>& samples, Vec2 h);

/// Gradient descent from theta = 0 with Barzilai-Borwein steps safeguarded by
/// a non-monotone Armijo backtracking search. All nodes are interior (the
/// boundary condition lives on the cell faces), so the projection onto
/// H^1_0 is the identity.
DescentResult minimize_g(const GridSpec& grid, const std::vector<Complex>& samples, Vec2 h,
                         const DescentOptions& opts = {});

}  // namespace vortexfield::oracle
