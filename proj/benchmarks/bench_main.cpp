#include <benchmark/benchmark.h>

#include "kgc/critical.hpp"
#include "kgc/profiles.hpp"

using namespace kgc;

static void BM_PhaseEval(benchmark::State& state) {
    const auto tr = f4_triple();
    const Vec2 xi{1.3e-4, 0.7e-4}, eta{0.02, -0.01};
    for (auto _ : state) benchmark::DoNotOptimize(phi(tr, xi, eta));
}
BENCHMARK(BM_PhaseEval);

static void BM_PhaseGradient(benchmark::State& state) {
    const auto tr = f4_triple();
    const Vec2 xi{1.3e-4, 0.7e-4}, eta{0.02, -0.01};
    for (auto _ : state) benchmark::DoNotOptimize(grad_eta_phi(tr, xi, eta));
}
BENCHMARK(BM_PhaseGradient);

static void BM_CutoffEval(benchmark::State& state) {
    const CutoffSpec spec;
    double r = 1.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_phi(spec, r));
        r = r < 1.2 ? r + 1e-6 : 1.1;
    }
}
BENCHMARK(BM_CutoffEval);

static void BM_CriticalPointSolve(benchmark::State& state) {
    const auto tr = f4_triple();
    const double a = std::exp2(-3.0 * state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_critical_point(tr, a));
}
BENCHMARK(BM_CriticalPointSolve)->Arg(4)->Arg(10);

static void BM_IntegrateAnnulus(benchmark::State& state) {
    OscIntegrand f;
    f.amplitude = [](Vec2 p) -> complex { return std::exp(-norm2(p)); };
    f.phase = [](Vec2 p) { return 0.5 * norm2(p); };
    f.phase_grad = [](Vec2 p) { return p; };
    QuadratureConfig cfg;
    const double s = double(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_annulus(f, s, 0.0, 4.0, cfg).value);
}
BENCHMARK(BM_IntegrateAnnulus)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
