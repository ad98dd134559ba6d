#include <benchmark/benchmark.h>

#include "annulus/energy.hpp"
#include "annulus/minimizer.hpp"
#include "annulus/verify.hpp"

using namespace annulus;
using geometry::Exponent;

static void BM_SolveTau(benchmark::State& state) {
    const double p = 1.0 + 0.25 * static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto sol = shooting::solve_tau(2.0, 2.0, Exponent(p));
        benchmark::DoNotOptimize(sol.c);
    }
}
BENCHMARK(BM_SolveTau)->Arg(1)->Arg(2)->Arg(3);

static void BM_BuildMinimizer(benchmark::State& state) {
    const auto nodes = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto m = minimizer::build_minimizer(2.0, 2.0, Exponent(1.5), nodes);
        benchmark::DoNotOptimize(m.energy);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildMinimizer)->Range(250, 4000)->Complexity();

static void BM_GTauAt(benchmark::State& state) {
    const auto params = gfield::make_params(0.5, 2.0, Exponent(1.5));
    double t = 1.0;
    for (auto _ : state) {
        t = 1.0 + std::fmod(t + 0.37, 0.99);
        benchmark::DoNotOptimize(gfield::g_tau_at(t, params));
    }
}
BENCHMARK(BM_GTauAt);

static void BM_GridEnergy(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = minimizer::build_minimizer(2.0, 2.0, Exponent(1.5), 1000);
    const auto grid = minimizer::sample_map(m, n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(energy::grid_energy(grid, Exponent(1.5)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GridEnergy)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_PerturbAndCompare(benchmark::State& state) {
    const auto m = minimizer::build_minimizer(2.0, 2.0, Exponent(1.5), 1000);
    verify::PerturbationSpec spec;
    spec.amplitude = 0.03;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        spec.seed = ++seed;
        benchmark::DoNotOptimize(verify::perturb_and_compare(m, spec, 512, 512).gap);
    }
}
BENCHMARK(BM_PerturbAndCompare);

static void BM_RadialEnergy(benchmark::State& state) {
    const auto m = minimizer::build_minimizer(2.0, 2.0, Exponent(1.5), 1000);
    for (auto _ : state) benchmark::DoNotOptimize(energy::radial_energy(m));
}
BENCHMARK(BM_RadialEnergy);

BENCHMARK_MAIN();
