#include "vortexfield/errors.hpp"
#include "vortexfield/micromag.hpp"
#include "vortexfield/renorm.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace vortexfield;

namespace {

constexpr double kPi = std::numbers::pi;
const double kW0Antipodal = -kPi * std::log(2.0);

// I(rho) for a = (0, pi), adaptive nested quadrature in double precision.
struct PuncturedReference {
    double rho;
    double value;
};
constexpr PuncturedReference kPunctured[] = {
    {0.2, 6.924976138497952},
    {0.1, 10.704449259473359},
    {0.05, 14.765594291551022},
    {0.025, 18.972248790918844},
    {0.0125, 23.252790302417765},
};

// W0 on the oval c = 0.2, boundary integral at 30 significant digits.
struct OvalReference {
    double s1;
    double s2;
    double value;
};
constexpr OvalReference kOval[] = {
    {0.0, kPi, -3.01832602903567515},
    {kPi / 2, 3 * kPi / 2, 0.803092585723126444},
    {0.3, 2.0, -0.320189977127331249},
    {1.0, 4.5, 0.249805075314090637},
};

}  // namespace

TEST(W0Disk, Examples)
{
    EXPECT_NEAR(w0_disk(VortexConfig::pair(0.0, kPi)), kW0Antipodal, 1e-15);
    EXPECT_NEAR(w0_disk(VortexConfig::pair(0.0, kPi)), -2.17759, 1e-5);
    EXPECT_EQ(w0_disk(VortexConfig::pair(0.0, 0.0)), std::numeric_limits<double>::infinity());
    EXPECT_NEAR(w0_disk(VortexConfig::pair(1.3, 2.0)), w0_disk(VortexConfig::pair(0.0, 0.7)), 1e-14);
    EXPECT_THROW(w0_disk(VortexConfig({{0.0, 2}})), UnsupportedConfig);
}

TEST(W0Conformal, DiskReducesToClosedForm)
{
    const auto disk = ConformalDomain::disk();
    EXPECT_NEAR(w0_conformal(disk, VortexConfig::pair(0.0, kPi), 1024), kW0Antipodal, 1e-6);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (int n = 0; n < 20; ++n) {
        const auto a = VortexConfig::pair(ang(rng), ang(rng));
        EXPECT_NEAR(w0_conformal(disk, a, 1024), w0_disk(a), 1e-6);
    }
}

TEST(W0Conformal, OvalMatchesHighPrecisionReference)
{
    const auto oval = ConformalDomain::oval(0.2);
    for (const auto& ref : kOval) {
        const auto a = VortexConfig::pair(ref.s1, ref.s2);
        EXPECT_NEAR(w0_conformal(oval, a, 1024), ref.value, 1e-6);
        EXPECT_NEAR(w0_conformal(oval, a, 4096), ref.value, 1e-8);
    }
}

TEST(W0Conformal, SelfConvergenceUnderNodeDoubling)
{
    const auto oval = ConformalDomain::oval(0.2);
    const auto a = VortexConfig::pair(0.0, kPi);
    EXPECT_LT(std::abs(w0_conformal(oval, a, 2048) - w0_conformal(oval, a, 4096)), 1e-6);
}

TEST(W0Conformal, ConjugationSymmetry)
{
    const auto oval = ConformalDomain::oval(0.2);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (int n = 0; n < 10; ++n) {
        const double s1 = ang(rng), s2 = ang(rng);
        EXPECT_NEAR(w0_conformal(oval, VortexConfig::pair(s1, s2)),
                    w0_conformal(oval, VortexConfig::pair(wrap_angle(-s1), wrap_angle(-s2))), 1e-9);
    }
}

TEST(W0Conformal, VortexOnANodeAndErrors)
{
    const auto oval = ConformalDomain::oval(0.2);
    const double on_node = 2.0 * kPi * 100 / 1024;
    EXPECT_TRUE(std::isfinite(w0_conformal(oval, VortexConfig::pair(on_node, on_node + 2.0), 1024)));
    EXPECT_EQ(w0_conformal(oval, VortexConfig::pair(1.0, 1.0)), std::numeric_limits<double>::infinity());
    EXPECT_THROW(w0_conformal(oval, VortexConfig::pair(0.0, 1.0), 1000), DomainError);
    EXPECT_THROW(w0_conformal(oval, VortexConfig::pair(0.0, 1.0), 32), DomainError);
}

TEST(PuncturedEnergy, MatchesIndependentQuadrature)
{
    const auto a = VortexConfig::pair(0.0, kPi);
    for (const auto& ref : kPunctured) EXPECT_NEAR(punctured_energy(a, ref.rho), ref.value, 1e-6) << ref.rho;
}

TEST(PuncturedEnergy, HalvingAddsTwoPiLogTwo)
{
    const auto a = VortexConfig::pair(0.0, kPi);
    const double rho = 0.0125;
    EXPECT_NEAR(punctured_energy(a, rho / 2) - punctured_energy(a, rho), 2.0 * kPi * std::log(2.0), 5e-2);
}

TEST(PuncturedEnergy, DivergenceRateIsTwoPi)
{
    const auto a = VortexConfig::pair(0.0, kPi);
    const double rhos[] = {0.025, 0.0125, 0.00625};
    // Least-squares slope of I against log(1/rho).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double r : rhos) {
        const double x = std::log(1.0 / r);
        const double y = punctured_energy(a, r);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
    EXPECT_NEAR(slope, 2.0 * kPi, 0.03 * 2.0 * kPi);
}

TEST(PuncturedEnergy, RotationInvariance)
{
    for (double rho : {0.1, 0.03}) {
        EXPECT_NEAR(punctured_energy(VortexConfig::pair(0.0, kPi), rho),
                    punctured_energy(VortexConfig::pair(kPi / 2, 3 * kPi / 2), rho), 1e-9);
        EXPECT_NEAR(punctured_energy(VortexConfig::pair(0.2, 1.9), rho),
                    punctured_energy(VortexConfig::pair(1.2, 2.9), rho), 1e-9);
    }
}

TEST(PuncturedEnergy, RenormalizedLimitOfCloserPair)
{
    // I - 2 pi log(1/rho) -> -2 pi log|a1 - a2| with an O(rho) tail.
    const auto a = VortexConfig::pair(0.5, 2.5);
    const double e1 = punctured_energy(a, 0.01) - 2.0 * kPi * std::log(1.0 / 0.01);
    const double e2 = punctured_energy(a, 0.005) - 2.0 * kPi * std::log(1.0 / 0.005);
    EXPECT_NEAR(2.0 * e2 - e1, 2.0 * w0_disk(a), 1e-2);
}

TEST(PuncturedEnergy, SerialAndParallelAreBitwiseEqual)
{
    const auto a = VortexConfig::pair(0.3, 2.2);
    EXPECT_EQ(punctured_energy(a, 0.02, {}, Exec::serial), punctured_energy(a, 0.02, {}, Exec::parallel));
}

TEST(PuncturedEnergy, Preconditions)
{
    const auto a = VortexConfig::pair(0.0, 0.2);
    const double sep = a.min_separation();
    EXPECT_THROW(punctured_energy(a, 0.5 * sep + 1e-9), DomainError);
    EXPECT_THROW(punctured_energy(a, 0.0), DomainError);
    EXPECT_NO_THROW(punctured_energy(a, 0.4 * sep));
}

TEST(TraceRatio, StaysBoundedAsTheBallShrinks)
{
    // u vanishes on the unit circle and is smooth near a1 = 1.
    const Complex a1 = 1.0;
    auto u = [](Complex x) { return 1.0 - std::norm(x); };
    auto grad = [](Complex x) { return Vec2{-2.0 * x.real(), -2.0 * x.imag()}; };
    auto v = [](Complex x) { return (1.0 - std::norm(x)) * (1.0 + x.imag()); };
    auto grad_v = [](Complex x) {
        const double q = 1.0 - std::norm(x);
        return Vec2{-2.0 * x.real() * (1.0 + x.imag()), -2.0 * x.imag() * (1.0 + x.imag()) + q};
    };
    for (int which = 0; which < 2; ++which) {
        double worst = 0.0;
        for (double rho : {0.2, 0.1, 0.05, 0.025}) {
            const double r = which == 0 ? trace_ratio(u, grad, a1, rho) : trace_ratio(v, grad_v, a1, rho);
            ASSERT_TRUE(std::isfinite(r));
            EXPECT_GT(r, 0.0);
            worst = std::max(worst, r);
        }
        EXPECT_LT(worst, 10.0);
    }
}

TEST(GFunctional, Examples)
{
    const GridSpec g{32, 64};
    const auto a = VortexConfig::pair(0.0, kPi);
    const PolarField zero(g);
    EXPECT_EQ(g_functional(a, zero, {0.0, 0.0}), 0.0);

    const Vec2 h{-0.01, 0.0};
    const auto samples = canonical_samples(a, g);
    PolarField coupling(g);
    for (std::size_t n = 0; n < samples.size(); ++n) {
        coupling.values()[n] = h.x * samples[n].real() + h.y * samples[n].imag();
    }
    EXPECT_NEAR(g_functional(a, zero, h), -integrate_disk(coupling), 1e-12);
}

TEST(GFunctional, FixedPointBeatsZero)
{
    const GridSpec g{32, 64};
    const auto a = VortexConfig::pair(0.0, kPi);
    const ExternalField h{-0.01, 0.0};
    const PicardResult res = picard_solve(a, h, g);
    ASSERT_TRUE(res.report.converged);
    EXPECT_LE(g_functional(a, res.theta, h.vec()), g_functional(a, PolarField(g), h.vec()) + 1e-12);
}

TEST(GFunctional, MinimalityAgainstSmoothBumps)
{
    const GridSpec g{48, 96};
    struct Case {
        VortexConfig a;
        ExternalField h;
    };
    const Case cases[] = {{VortexConfig::pair(0.0, kPi), {-0.01, 0.0}},
                          {VortexConfig::pair(0.5, 2.5), {0.0, 0.1}}};
    // Bumps vanishing on the unit circle: radial, and angular modes 1 and 2
    // localized at different radii.
    const auto bumps = [&] {
        std::vector<PolarField> out;
        out.push_back(PolarField::sample(g, [](double r, double) { return 1.0 - r * r; }));
        out.push_back(PolarField::sample(g, [](double r, double t) { return (r - r * r * r) * std::cos(t); }));
        out.push_back(PolarField::sample(g, [](double r, double t) { return r * r * (1.0 - r) * std::sin(2.0 * t); }));
        out.push_back(PolarField::sample(g, [](double r, double t) {
            const double q = (r - 0.7) / 0.2;
            return std::abs(q) < 1.0 ? std::pow(1.0 - q * q, 2) * std::cos(t - 1.0) : 0.0;
        }));
        out.push_back(PolarField::sample(g, [](double r, double t) { return (1.0 - r) * std::exp(-4.0 * r * r) * (1.0 + std::sin(3.0 * t)); }));
        return out;
    }();
    for (const auto& c : cases) {
        const auto samples = canonical_samples(c.a, g);
        const PicardResult res = picard_solve(c.a, c.h, g);
        ASSERT_TRUE(res.report.converged);
        const double g_star = g_functional(res.theta, samples, c.h.vec());
        for (const auto& b : bumps) {
            for (double eps : {-0.3, -0.1, 0.1, 0.3}) {
                PolarField p = res.theta;
                for (std::size_t n = 0; n < p.values().size(); ++n) p.values()[n] += eps * b.values()[n];
                EXPECT_GE(g_functional(p, samples, c.h.vec()) - g_star, -1e-10);
            }
        }
    }
}
