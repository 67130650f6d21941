#include "vortexfield/errors.hpp"
#include "vortexfield/poisson.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace vortexfield;

namespace {

constexpr double kPi = std::numbers::pi;

PolarField random_field(const GridSpec& g, std::uint64_t seed, double lo = -1.0)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(lo, 1.0);
    return PolarField::sample(g, [&](double, double) { return u(rng); });
}

template <class F, class U>
double solve_error(GridSpec g, F&& f, U&& exact)
{
    const PolarField u = solve_dirichlet(PolarField::sample(g, f));
    return max_abs_difference(u, PolarField::sample(g, exact));
}

double dot(const PolarField& a, const PolarField& b)
{
    PolarField p(a.grid());
    for (std::size_t n = 0; n < p.values().size(); ++n) p.values()[n] = a.values()[n] * b.values()[n];
    return integrate_disk(p);
}

}  // namespace

TEST(GridSpec, Validation)
{
    EXPECT_THROW((GridSpec{3, 16}.validate()), DomainError);
    EXPECT_THROW((GridSpec{8, 15}.validate()), DomainError);
    EXPECT_THROW((GridSpec{8, 6}.validate()), DomainError);
    EXPECT_NO_THROW((GridSpec{4, 8}.validate()));
    EXPECT_DOUBLE_EQ((GridSpec{4, 8}.radius(0)), 0.125);
}

TEST(Solve, ZeroRightHandSide)
{
    const GridSpec g{16, 32};
    const PolarField u = solve_dirichlet(PolarField(g));
    EXPECT_EQ(u.max_abs(), 0.0);
}

TEST(Solve, RejectsNonFiniteInput)
{
    const GridSpec g{8, 16};
    PolarField f(g);
    f(2, 3) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(solve_dirichlet(f), DomainError);
    PoissonSolver other(GridSpec{8, 32});
    EXPECT_THROW((void)other.solve(PolarField(g)), DomainError);
}

TEST(Solve, ManufacturedRadialSolutionIsSecondOrder)
{
    auto f = [](double, double) { return 4.0; };
    auto exact = [](double r, double) { return 1.0 - r * r; };
    const double e1 = solve_error(GridSpec{16, 32}, f, exact);
    const double e2 = solve_error(GridSpec{32, 64}, f, exact);
    const double e3 = solve_error(GridSpec{64, 128}, f, exact);
    EXPECT_LT(e1, 1e-2);
    EXPECT_GE(std::log2(e1 / e2), 1.9);
    EXPECT_GE(std::log2(e2 / e3), 1.9);
}

TEST(Solve, ManufacturedFirstModeIsSecondOrder)
{
    auto f = [](double r, double t) { return 8.0 * r * std::cos(t); };
    auto exact = [](double r, double t) { return (r - r * r * r) * std::cos(t); };
    const double e1 = solve_error(GridSpec{16, 32}, f, exact);
    const double e2 = solve_error(GridSpec{32, 64}, f, exact);
    const double e3 = solve_error(GridSpec{64, 128}, f, exact);
    EXPECT_GE(std::log2(e1 / e2), 1.9);
    EXPECT_GE(std::log2(e2 / e3), 1.9);
}

TEST(Solve, ResidualOfTheDiscreteOperator)
{
    const GridSpec g{24, 48};
    const PoissonSolver solver(g);
    const PolarField f = random_field(g, 1);
    const PolarField u = solver.solve(f);
    EXPECT_LT(max_abs_difference(solver.apply(u), f), 1e-10);
}

TEST(Solve, FftMatchesDirectTransformReference)
{
    const GridSpec g{20, 40};
    const PoissonSolver solver(g);
    const PolarField f = random_field(g, 2);
    EXPECT_LT(max_abs_difference(solver.solve(f), solver.solve_reference(f)), 1e-12);
}

TEST(Solve, SerialAndParallelAreBitwiseEqual)
{
    const GridSpec g{64, 128};
    const PoissonSolver solver(g);
    const PolarField f = random_field(g, 3);
    const PolarField a = solver.solve(f, Exec::serial);
    const PolarField b = solver.solve(f, Exec::parallel);
    EXPECT_EQ(max_abs_difference(a, b), 0.0);
}

TEST(Solve, DiscreteMaximumPrinciple)
{
    const GridSpec g{32, 64};
    for (std::uint64_t seed = 10; seed < 15; ++seed) {
        const PolarField u = solve_dirichlet(random_field(g, seed, 0.0));
        for (double v : u.values()) EXPECT_GE(v, -1e-12);
    }
}

TEST(Solve, SelfAdjointUnderTheDiskInnerProduct)
{
    const GridSpec g{32, 64};
    const PolarField f = random_field(g, 20);
    const PolarField h = random_field(g, 21);
    const double lhs = dot(h, solve_dirichlet(f));
    const double rhs = dot(f, solve_dirichlet(h));
    EXPECT_LT(std::abs(lhs - rhs), 1e-8 * std::max(std::abs(lhs), 1e-300));
}

TEST(Solve, RegularAtThePole)
{
    const GridSpec g{64, 128};
    for (std::uint64_t seed = 30; seed < 33; ++seed) {
        const PolarField u = solve_dirichlet(random_field(g, seed));
        ASSERT_TRUE(u.all_finite());
        double inner = 0.0;
        for (int k = 0; k < g.n_t; ++k) inner = std::max(inner, std::abs(u(0, k)));
        EXPECT_LE(inner, u.max_abs());
    }
    // A radial source gives a solution constant on the innermost ring.
    const PolarField u = solve_dirichlet(PolarField(g, 1.0));
    for (int k = 1; k < g.n_t; ++k) EXPECT_NEAR(u(0, k), u(0, 0), 1e-14);
}

TEST(IntegrateDisk, Examples)
{
    const GridSpec g{64, 128};
    EXPECT_NEAR(integrate_disk(PolarField(g, 1.0)), kPi, 1e-10);
    auto err = [](GridSpec grid, auto f, double exact) {
        return std::abs(integrate_disk(PolarField::sample(grid, f)) - exact);
    };
    auto r2 = [](double r, double) { return r * r; };
    auto g4 = [](double r, double) { return 4.0 * r * r; };
    const GridSpec g2{128, 256};
    EXPECT_LT(err(g, r2, kPi / 2), 1e-3);
    EXPECT_NEAR(err(g, r2, kPi / 2) / err(g2, r2, kPi / 2), 4.0, 0.1);
    EXPECT_LT(err(g, g4, 2 * kPi), 1e-3);
    EXPECT_NEAR(err(g, g4, 2 * kPi) / err(g2, g4, 2 * kPi), 4.0, 0.1);
}

TEST(IntegrateDisk, SerialAndParallelAreBitwiseEqual)
{
    const PolarField f = random_field(GridSpec{96, 192}, 40);
    EXPECT_EQ(integrate_disk(f, Exec::serial), integrate_disk(f, Exec::parallel));
}

TEST(GradientEnergy, Examples)
{
    EXPECT_EQ(gradient_energy(PolarField(GridSpec{16, 32})), 0.0);
    auto err = [](GridSpec g) {
        return std::abs(gradient_energy(PolarField::sample(g, [](double r, double) { return 1.0 - r * r; })) - kPi);
    };
    const double e1 = err(GridSpec{32, 64});
    const double e2 = err(GridSpec{64, 128});
    EXPECT_LT(e1, 1e-2);
    EXPECT_GE(e1 / e2, 3.5);
}

TEST(GradientEnergy, ParabolaErrorIsCubicInTheRadialStep)
{
    // Face differences of 1 - r^2 are exact; summing them by hand leaves
    // E_h - pi = pi dr^3 / 8 for every angular resolution.
    for (int n : {8, 32, 100}) {
        const GridSpec g{n, 16};
        const double e = gradient_energy(PolarField::sample(g, [](double r, double) { return 1.0 - r * r; }));
        EXPECT_NEAR(e - kPi, kPi * std::pow(g.dr(), 3) / 8.0, 1e-13);
    }
}

TEST(GradientEnergy, IsTheQuadraticFormOfTheSolver)
{
    // 2 E(u) = <u, -Lap_h u> in the disk inner product.
    const GridSpec g{24, 48};
    const PoissonSolver solver(g);
    const PolarField u = random_field(g, 50);
    EXPECT_NEAR(2.0 * gradient_energy(u), dot(u, solver.apply(u)), 1e-9 * gradient_energy(u));
}
