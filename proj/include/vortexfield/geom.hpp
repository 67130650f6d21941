#pragma once

// Complex-plane geometry: the unit disk and the conformal family
//
//     Phi(z) = z / (1 - c z^2),   0 <= c < 1/2,
//
// whose image of the closed unit disk is an oval elongated along the real
// axis (c = 0.2 is the standard test shape). Points of the plane are carried
// as std::complex<double>.

#include <complex>

namespace vortexfield {

using Complex = std::complex<double>;

/// Plain vector in R^2.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    [[nodiscard]] double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    [[nodiscard]] double norm() const;
    [[nodiscard]] Complex as_complex() const { return {x, y}; }
    [[nodiscard]] static Vec2 from_complex(Complex z) { return {z.real(), z.imag()}; }
};

enum class DomainKind { disk, conformal };

/// Points closer than this to the unit circle from outside are still "on" it.
inline constexpr double kBoundaryTolerance = 1e-12;

class ConformalDomain {
public:
    static ConformalDomain disk();
    /// Throws DomainError unless 0 <= c < 0.5.
    static ConformalDomain oval(double c = 0.2);

    [[nodiscard]] DomainKind kind() const { return kind_; }
    [[nodiscard]] double coefficient() const { return c_; }
    [[nodiscard]] bool is_disk() const { return kind_ == DomainKind::disk; }

    // Unchecked analytic evaluations of Phi and its derivatives.
    [[nodiscard]] Complex phi(Complex z) const;
    [[nodiscard]] Complex dphi(Complex z) const;
    [[nodiscard]] Complex d2phi(Complex z) const;
    [[nodiscard]] Complex d3phi(Complex z) const;
    /// Unchecked inverse; returns the root of c w z^2 + z - w = 0 nearest the origin.
    [[nodiscard]] Complex psi(Complex w) const;

    /// True when w lies in the closed domain (up to kBoundaryTolerance in the disk variable).
    [[nodiscard]] bool contains(Complex w) const;

private:
    ConformalDomain(DomainKind kind, double c) : kind_(kind), c_(c) {}

    DomainKind kind_;
    double c_;
};

/// Phi(z). Throws DomainError if |z| > 1 + kBoundaryTolerance or z is not finite.
Complex conformal_forward(const ConformalDomain& domain, Complex z);

/// Psi(w) with Psi(0) = 0. Throws DomainError when w lies outside the closed domain.
Complex conformal_inverse(const ConformalDomain& domain, Complex w);

/// Boundary curve gamma(t) = Phi(e^{it}) and its first two t-derivatives.
struct BoundaryPoint {
    Complex position;
    Complex velocity;      ///< gamma'(t)
    Complex acceleration;  ///< gamma''(t)

    [[nodiscard]] double speed() const { return std::abs(velocity); }
    /// Unit outward normal (the tangent rotated by -90 degrees).
    [[nodiscard]] Complex outward_normal() const;
};

BoundaryPoint boundary_point(const ConformalDomain& domain, double t);

/// Signed curvature Im(gamma'' conj(gamma')) / |gamma'|^3 of the boundary at parameter t.
/// Throws DomainError when |gamma'(t)| < 1e-14.
double boundary_curvature(const ConformalDomain& domain, double t);

/// kappa(t) |gamma'(t)|, the density of boundary turning with respect to t, and its t-derivative.
struct TurningDensity {
    double value = 0.0;
    double derivative = 0.0;
};

TurningDensity turning_density(const ConformalDomain& domain, double t);

/// Reduces an angle to [0, 2pi).
double wrap_angle(double s);

/// Signed shortest displacement b - a on the circle, in [-pi, pi).
double angle_difference(double a, double b);

}  // namespace vortexfield
