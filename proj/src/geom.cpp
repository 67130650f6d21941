#include "vortexfield/geom.hpp"

#include "vortexfield/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vortexfield {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

double Vec2::norm() const { return std::hypot(x, y); }

ConformalDomain ConformalDomain::disk() { return {DomainKind::disk, 0.0}; }

ConformalDomain ConformalDomain::oval(double c)
{
    if (!(c >= 0.0 && c < 0.5)) {
        throw DomainError("conformal coefficient must lie in [0, 0.5), got " + std::to_string(c));
    }
    return {DomainKind::conformal, c};
}

Complex ConformalDomain::phi(Complex z) const
{
    if (is_disk()) return z;
    return z / (1.0 - c_ * z * z);
}

Complex ConformalDomain::dphi(Complex z) const
{
    if (is_disk()) return 1.0;
    const Complex z2 = z * z;
    const Complex d = 1.0 - c_ * z2;
    return (1.0 + c_ * z2) / (d * d);
}

Complex ConformalDomain::d2phi(Complex z) const
{
    if (is_disk()) return 0.0;
    const Complex z2 = z * z;
    const Complex d = 1.0 - c_ * z2;
    return 2.0 * c_ * z * (3.0 + c_ * z2) / (d * d * d);
}

Complex ConformalDomain::d3phi(Complex z) const
{
    if (is_disk()) return 0.0;
    const Complex z2 = z * z;
    const Complex d = 1.0 - c_ * z2;
    const Complex d2 = d * d;
    return 6.0 * c_ * (1.0 + 6.0 * c_ * z2 + c_ * c_ * z2 * z2) / (d2 * d2);
}

Complex ConformalDomain::psi(Complex w) const
{
    if (is_disk() || c_ == 0.0) return w;
    // (-1 + sqrt(1 + 4 c w^2)) / (2 c w), rationalized so that w -> 0 is exact.
    return 2.0 * w / (1.0 + std::sqrt(1.0 + 4.0 * c_ * w * w));
}

bool ConformalDomain::contains(Complex w) const
{
    if (!finite(w)) return false;
    return std::abs(psi(w)) <= 1.0 + kBoundaryTolerance;
}

Complex conformal_forward(const ConformalDomain& domain, Complex z)
{
    if (!finite(z) || std::abs(z) > 1.0 + kBoundaryTolerance) {
        throw DomainError("conformal_forward: point outside the closed unit disk");
    }
    return domain.phi(z);
}

Complex conformal_inverse(const ConformalDomain& domain, Complex w)
{
    if (!finite(w)) throw DomainError("conformal_inverse: non-finite point");
    const Complex z = domain.psi(w);
    if (std::abs(z) > 1.0 + kBoundaryTolerance) {
        throw DomainError("conformal_inverse: point outside the domain");
    }
    return z;
}

Complex BoundaryPoint::outward_normal() const
{
    const Complex unit = velocity / std::abs(velocity);
    return Complex(unit.imag(), -unit.real());
}

BoundaryPoint boundary_point(const ConformalDomain& domain, double t)
{
    const Complex z = std::polar(1.0, t);
    const Complex i(0.0, 1.0);
    const Complex d1 = domain.dphi(z);
    const Complex d2 = domain.d2phi(z);
    BoundaryPoint p;
    p.position = domain.phi(z);
    p.velocity = i * z * d1;
    p.acceleration = -z * d1 - z * z * d2;
    return p;
}

double boundary_curvature(const ConformalDomain& domain, double t)
{
    if (domain.is_disk()) return 1.0;
    const BoundaryPoint p = boundary_point(domain, t);
    const double speed = p.speed();
    if (speed < 1e-14) throw DomainError("boundary_curvature: degenerate parametrization");
    return (p.acceleration * std::conj(p.velocity)).imag() / (speed * speed * speed);
}

TurningDensity turning_density(const ConformalDomain& domain, double t)
{
    if (domain.is_disk()) return {1.0, 0.0};
    const Complex z = std::polar(1.0, t);
    const Complex i(0.0, 1.0);
    const Complex d1 = domain.dphi(z);
    const Complex d2 = domain.d2phi(z);
    const Complex d3 = domain.d3phi(z);
    const Complex g1 = i * z * d1;
    const Complex g2 = -z * d1 - z * z * d2;
    const Complex g3 = -i * (z * d1 + 3.0 * z * z * d2 + z * z * z * d3);
    const double s2 = std::norm(g1);
    if (s2 < 1e-28) throw DomainError("turning_density: degenerate parametrization");
    const double num = (g2 * std::conj(g1)).imag();
    // d/dt Im(g2 conj g1) = Im(g3 conj g1); d/dt |g1|^2 = 2 Re(g2 conj g1).
    const double dnum = (g3 * std::conj(g1)).imag();
    const double ds2 = 2.0 * (g2 * std::conj(g1)).real();
    return {num / s2, (dnum * s2 - num * ds2) / (s2 * s2)};
}

double wrap_angle(double s)
{
    double r = std::fmod(s, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double angle_difference(double a, double b)
{
    double d = std::fmod(b - a + std::numbers::pi, kTwoPi);
    if (d < 0.0) d += kTwoPi;
    return d - std::numbers::pi;
}

}  // namespace vortexfield
