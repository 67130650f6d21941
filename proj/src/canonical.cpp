#include "vortexfield/canonical.hpp"

#include "vortexfield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace vortexfield {

VortexConfig::VortexConfig(std::vector<Vortex> vortices) : vortices_(std::move(vortices))
{
    const int total = std::accumulate(vortices_.begin(), vortices_.end(), 0,
                                      [](int acc, const Vortex& v) { return acc + v.degree; });
    if (total != 2) {
        throw UnsupportedConfig("vortex degrees must sum to 2, got " + std::to_string(total));
    }
    for (auto& v : vortices_) {
        if (!std::isfinite(v.angle)) throw DomainError("vortex angle is not finite");
        v.angle = wrap_angle(v.angle);
    }
}

VortexConfig VortexConfig::pair(double s1, double s2)
{
    return VortexConfig({{s1, 1}, {s2, 1}});
}

Complex VortexConfig::position(std::size_t j) const { return std::polar(1.0, vortices_[j].angle); }

bool VortexConfig::is_simple_pair() const
{
    return vortices_.size() == 2 && vortices_[0].degree == 1 && vortices_[1].degree == 1;
}

double VortexConfig::min_separation() const
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < vortices_.size(); ++j) {
        for (std::size_t k = j + 1; k < vortices_.size(); ++k) {
            best = std::min(best, std::abs(position(j) - position(k)));
        }
    }
    return best;
}

bool VortexConfig::degenerate() const { return min_separation() < kSingularityGuard; }

Complex canonical_map_disk(const VortexConfig& a, Complex x)
{
    if (!a.is_simple_pair()) {
        throw UnsupportedConfig("canonical map needs two vortices of degree one");
    }
    if (a.degenerate()) throw UnsupportedConfig("canonical map: coincident vortices");
    const Complex a1 = a.position(0);
    const Complex a2 = a.position(1);
    const Complex x1 = x - a1;
    const Complex x2 = x - a2;
    const double r1 = std::abs(x1);
    const double r2 = std::abs(x2);
    if (r1 <= kSingularityGuard || r2 <= kSingularityGuard) {
        throw SingularityError("canonical map evaluated at a vortex");
    }
    const Complex d = a1 - a2;
    // Each factor has unit modulus; normalizing separately keeps |M| = 1 to rounding.
    return (x1 / r1) * (x2 / r2) * (std::abs(d) / d);
}

Complex pushforward_map(const ConformalDomain& domain, const VortexConfig& a, Complex w)
{
    if (domain.is_disk()) return canonical_map_disk(a, w);
    const Complex z = conformal_inverse(domain, w);
    const Complex d = domain.dphi(z);
    return canonical_map_disk(a, z) * (d / std::abs(d));
}

Vec2 grad_phistar(const VortexConfig& a, Complex x)
{
    Vec2 g;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const Complex v = x - a.position(j);
        const double r2 = std::norm(v);
        if (std::sqrt(r2) <= kSingularityGuard) {
            throw SingularityError("grad_phistar evaluated at a vortex");
        }
        const double d = a.vortices()[j].degree;
        g.x += -d * v.imag() / r2;
        g.y += d * v.real() / r2;
    }
    return g;
}

}  // namespace vortexfield
