#pragma once

// One-dimensional quadrature shared by the boundary integrals, the punctured
// domain evaluator and the self-tests of the singular-integration layer.

#include <functional>
#include <span>

namespace vortexfield {

/// Gauss-Legendre rule of fixed order on [-1, 1] (abscissae ascending).
struct GaussRule {
    std::span<const double> nodes;
    std::span<const double> weights;
};

/// Supported orders: 8, 16, 24, 32.
GaussRule gauss_legendre(int order);

/// Composite Gauss-Legendre over [a, b] split into `panels` equal pieces.
double integrate_gauss(const std::function<double(double)>& f, double a, double b, int panels = 1,
                       int order = 16);

/// Composite Gauss-Legendre with panels shrinking geometrically by `ratio`
/// toward the endpoint `a`, for integrands with an integrable endpoint
/// singularity there (log, log^2, x^-alpha with alpha < 1).
double integrate_graded(const std::function<double(double)>& f, double a, double b, int levels = 40,
                        double ratio = 0.15, int order = 16);

enum class LogSinIntegral { log_sin, log_sin_squared };

/// int_0^{pi/2} log(sin x) dx or int_0^{pi/2} log(sin x)^2 dx. The log sin
/// integrand is split into the smooth part log(sin x / x) and the singular
/// log x, whose integral is known in closed form; the squared integrand goes
/// through the graded rule.
double singular_quadrature_1d(LogSinIntegral kind);

}  // namespace vortexfield
