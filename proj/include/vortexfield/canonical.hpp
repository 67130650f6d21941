#pragma once

// Canonical harmonic maps for two boundary vortices of degree one on the
// unit disk, their pushforward to a conformal image domain, and the gradient
// of the harmonic lifting phi* = sum_j d_j Arg(x - a_j).

#include "vortexfield/geom.hpp"

#include <vector>

namespace vortexfield {

struct Vortex {
    double angle = 0.0;  ///< position e^{i angle} on the unit circle, angle in [0, 2pi)
    int degree = 1;
};

/// Boundary vortices on the unit circle. The multiplicities must sum to 2;
/// coincident angles are allowed and reported by degenerate().
class VortexConfig {
public:
    VortexConfig() = default;
    /// Throws UnsupportedConfig if the degrees do not sum to 2.
    explicit VortexConfig(std::vector<Vortex> vortices);

    /// The pair {(e^{i s1}, 1), (e^{i s2}, 1)} used throughout the energy code.
    static VortexConfig pair(double s1, double s2);

    [[nodiscard]] const std::vector<Vortex>& vortices() const { return vortices_; }
    [[nodiscard]] std::size_t size() const { return vortices_.size(); }
    [[nodiscard]] Complex position(std::size_t j) const;
    [[nodiscard]] double angle(std::size_t j) const { return vortices_[j].angle; }

    /// True for a pair of degree-one vortices.
    [[nodiscard]] bool is_simple_pair() const;
    /// True when two vortices coincide (within 1e-12 on the circle).
    [[nodiscard]] bool degenerate() const;
    /// Smallest pairwise chord distance.
    [[nodiscard]] double min_separation() const;

private:
    std::vector<Vortex> vortices_;
};

/// Distance below which evaluations at a vortex are rejected.
inline constexpr double kSingularityGuard = 1e-12;

/// M(x; a) = (x - a1)(x - a2)|a1 - a2| / (|x - a1||x - a2|(a1 - a2)).
/// Throws UnsupportedConfig unless a is a non-degenerate simple pair and
/// SingularityError when x is within kSingularityGuard of a vortex.
Complex canonical_map_disk(const VortexConfig& a, Complex x);

/// M*(w) = M(Psi(w); a) Phi'(Psi(w)) / |Phi'(Psi(w))|, the canonical map of the
/// pushed vortices Phi(a_j). Equal to canonical_map_disk on the disk.
Complex pushforward_map(const ConformalDomain& domain, const VortexConfig& a, Complex w);

/// grad phi*(x) = sum_j d_j (x - a_j)^perp / |x - a_j|^2. Valid for any N.
Vec2 grad_phistar(const VortexConfig& a, Complex x);

}  // namespace vortexfield
