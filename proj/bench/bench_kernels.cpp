// Serial reference paths against the OpenMP kernels.

#include "vortexfield/micromag.hpp"
#include "vortexfield/optimize.hpp"
#include "vortexfield/renorm.hpp"

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

using namespace vortexfield;

namespace {

PolarField random_rhs(const GridSpec& g)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return PolarField::sample(g, [&](double, double) { return u(rng); });
}

GridSpec grid_arg(const benchmark::State& st)
{
    const int n = static_cast<int>(st.range(0));
    return {n, 2 * n};
}

void BM_SolveReference(benchmark::State& st)
{
    const PoissonSolver solver(grid_arg(st));
    const PolarField f = random_rhs(solver.grid());
    for (auto _ : st) benchmark::DoNotOptimize(solver.solve_reference(f));
}
BENCHMARK(BM_SolveReference)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_SolveSerial(benchmark::State& st)
{
    const PoissonSolver solver(grid_arg(st));
    const PolarField f = random_rhs(solver.grid());
    for (auto _ : st) benchmark::DoNotOptimize(solver.solve(f, Exec::serial));
}
BENCHMARK(BM_SolveSerial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SolveParallel(benchmark::State& st)
{
    const PoissonSolver solver(grid_arg(st));
    const PolarField f = random_rhs(solver.grid());
    for (auto _ : st) benchmark::DoNotOptimize(solver.solve(f, Exec::parallel));
}
BENCHMARK(BM_SolveParallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_PicardRhs(benchmark::State& st)
{
    const GridSpec g = grid_arg(st);
    const auto samples = canonical_samples(VortexConfig::pair(0.0, std::numbers::pi), g);
    const PolarField theta = random_rhs(g);
    const Exec exec = st.range(1) ? Exec::parallel : Exec::serial;
    for (auto _ : st) benchmark::DoNotOptimize(picard_rhs(theta, samples, {0.01, -0.02}, exec));
}
BENCHMARK(BM_PicardRhs)->Args({128, 0})->Args({128, 1})->Unit(benchmark::kMicrosecond);

void BM_PuncturedEnergy(benchmark::State& st)
{
    const auto a = VortexConfig::pair(0.0, std::numbers::pi);
    const Exec exec = st.range(0) ? Exec::parallel : Exec::serial;
    for (auto _ : st) benchmark::DoNotOptimize(punctured_energy(a, 0.0125, {}, exec));
}
BENCHMARK(BM_PuncturedEnergy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Landscape(benchmark::State& st)
{
    EnergySettings settings;
    settings.grid = {32, 64};
    const Objective f = make_energy_objective(ConformalDomain::oval(0.2), {-0.01, 0.0}, settings);
    const Exec exec = st.range(0) ? Exec::parallel : Exec::serial;
    for (auto _ : st) benchmark::DoNotOptimize(landscape(f, 16, exec));
}
BENCHMARK(BM_Landscape)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
