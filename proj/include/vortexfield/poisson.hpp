#pragma once

// Dirichlet Poisson solver on the unit disk.
//
// Unknowns live at cell centres of a polar grid, r_i = (i + 1/2) dr and
// t_k = k dt (0-based), so no node sits on the pole or the boundary circle.
// The discrete operator is the conservative five-point polar Laplacian; the
// Dirichlet condition u(1) = 0 is imposed through the ghost value
// u_{n_r} = -u_{n_r - 1}. The solver diagonalizes the periodic angular
// direction with a real FFT and solves one tridiagonal system per mode.

#include "vortexfield/parallel.hpp"

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace vortexfield {

struct GridSpec {
    int n_r = 128;
    int n_t = 256;

    /// Throws DomainError unless n_r >= 4 and n_t is even and >= 8.
    void validate() const;

    [[nodiscard]] double dr() const { return 1.0 / n_r; }
    [[nodiscard]] double dt() const;
    [[nodiscard]] double radius(int i) const { return (i + 0.5) * dr(); }
    [[nodiscard]] double angle(int k) const { return k * dt(); }
    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(n_r) * n_t; }
    [[nodiscard]] std::size_t index(int i, int k) const
    {
        return static_cast<std::size_t>(i) * n_t + k;
    }

    bool operator==(const GridSpec&) const = default;
};

/// Real samples on a GridSpec, row-major in (radius, angle). Fields carried
/// here satisfy the homogeneous Dirichlet condition at r = 1.
class PolarField {
public:
    PolarField() = default;
    explicit PolarField(GridSpec grid, double fill = 0.0);

    [[nodiscard]] const GridSpec& grid() const { return grid_; }
    [[nodiscard]] std::span<double> values() { return values_; }
    [[nodiscard]] std::span<const double> values() const { return values_; }

    double& operator()(int i, int k) { return values_[grid_.index(i, k)]; }
    double operator()(int i, int k) const { return values_[grid_.index(i, k)]; }

    /// Fills the field from f(r, t).
    template <class F>
    static PolarField sample(const GridSpec& grid, F&& f)
    {
        PolarField out(grid);
        for (int i = 0; i < grid.n_r; ++i) {
            const double r = grid.radius(i);
            for (int k = 0; k < grid.n_t; ++k) out(i, k) = f(r, grid.angle(k));
        }
        return out;
    }

    [[nodiscard]] double max_abs() const;
    [[nodiscard]] bool all_finite() const;

private:
    GridSpec grid_{};
    std::vector<double> values_;
};

/// Max-norm of a - b (grids must match).
double max_abs_difference(const PolarField& a, const PolarField& b);

class PoissonSolver {
public:
    explicit PoissonSolver(GridSpec grid);
    ~PoissonSolver();
    PoissonSolver(PoissonSolver&&) noexcept;
    PoissonSolver& operator=(PoissonSolver&&) noexcept;
    PoissonSolver(const PoissonSolver&) = delete;
    PoissonSolver& operator=(const PoissonSolver&) = delete;

    [[nodiscard]] const GridSpec& grid() const { return grid_; }

    /// Returns u with -Lap_h u = f. Throws DomainError on non-finite input or a
    /// grid mismatch. Safe to call concurrently.
    [[nodiscard]] PolarField solve(const PolarField& f, Exec exec = Exec::parallel) const;

    /// Same discrete problem, solved with an O(n_t^2) direct DFT instead of
    /// the FFT. Serial; kept as the reference for the FFT path.
    [[nodiscard]] PolarField solve_reference(const PolarField& f) const;

    /// Applies -Lap_h (the operator solve() inverts).
    [[nodiscard]] PolarField apply(const PolarField& u) const;

private:
    struct Plans;

    void solve_modes(std::vector<std::complex<double>>& spectrum, Exec exec) const;
    void check(const PolarField& f) const;

    GridSpec grid_;
    int modes_ = 0;
    // Thomas factorization per mode: modified super-diagonal and pivot reciprocals.
    std::vector<double> sub_;
    std::vector<double> cprime_;
    std::vector<double> inv_pivot_;
    std::unique_ptr<Plans> plans_;
};

/// One-shot convenience wrapper around PoissonSolver.
PolarField solve_dirichlet(const PolarField& f);

/// sum_{i,k} g(r_i, t_k) r_i dr dt. Ring sums are formed independently and
/// added in ring order, so the value does not depend on `exec`.
double integrate_disk(const PolarField& g, Exec exec = Exec::parallel);

/// Discrete Dirichlet energy 1/2 int |grad u|^2, the quadratic form of the
/// solver's operator: face differences in r and t, and a one-sided
/// difference against the zero boundary value in the outer half cell.
double gradient_energy(const PolarField& u);

}  // namespace vortexfield
