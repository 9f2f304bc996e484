#include <benchmark/benchmark.h>

#include "dqlab/doubling.hpp"
#include "dqlab/langevin.hpp"
#include "dqlab/rng.hpp"

namespace {

using namespace dqlab;

void BM_NormalStream(benchmark::State& state) {
    rng::NormalStream stream(12345);
    for (auto _ : state) benchmark::DoNotOptimize(stream.next());
}
BENCHMARK(BM_NormalStream);

void BM_LangevinPaths(benchmark::State& state) {
    model::OscillatorParams p;
    p.gamma = 1.0;
    langevin::LangevinConfig cfg;
    cfg.kBT = 1.0;
    cfg.dt = 1e-3;
    cfg.t_end = 1.0;
    cfg.n_paths = static_cast<int>(state.range(0));
    cfg.seed = 7;
    for (auto _ : state) {
        auto ens = langevin::simulate_langevin(p, cfg);
        benchmark::DoNotOptimize(ens.paths.back().v.back());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 1000);
}
BENCHMARK(BM_LangevinPaths)->Arg(100)->Arg(1000);

void BM_ThetaVacuumExplicit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(doubling::theta_vacuum_overlap_explicit(0.7, n));
    state.SetComplexityN(n);
}
BENCHMARK(BM_ThetaVacuumExplicit)->Arg(2)->Arg(4)->Arg(6)->Complexity();

} // namespace
