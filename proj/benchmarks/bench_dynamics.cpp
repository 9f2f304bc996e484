#include <benchmark/benchmark.h>

#include "dqlab/dynamics.hpp"
#include "dqlab/su11.hpp"

namespace {

dqlab::model::OscillatorParams damped() {
    dqlab::model::OscillatorParams p;
    p.gamma = 0.2;
    return p;
}

void BM_IntegrateRK4(benchmark::State& state) {
    const auto p = damped();
    const auto d = dqlab::model::derive_params(p);
    const double t_end = static_cast<double>(state.range(0)) * d.tau;
    for (auto _ : state) {
        auto traj = dqlab::dynamics::integrate_rot({1.0, 0.0, 0.0, 0.0, 0.0}, p, 1e-3 * d.tau, t_end);
        benchmark::DoNotOptimize(traj.states.back());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(1000.0 * state.range(0)));
}
BENCHMARK(BM_IntegrateRK4)->Arg(1)->Arg(10);

void BM_IntegrateAdaptive(benchmark::State& state) {
    const auto p = damped();
    const auto d = dqlab::model::derive_params(p);
    dqlab::dynamics::IntegrateOptions opt;
    opt.method = dqlab::dynamics::Method::Adaptive;
    for (auto _ : state) {
        auto traj =
            dqlab::dynamics::integrate_rot({1.0, 0.0, 0.0, 0.0, 0.0}, p, 0.1 * d.tau, 10.0 * d.tau, opt);
        benchmark::DoNotOptimize(traj.states.back());
    }
}
BENCHMARK(BM_IntegrateAdaptive);

void BM_ObservablesPerState(benchmark::State& state) {
    const auto p = damped();
    const auto d = dqlab::model::derive_params(p);
    const dqlab::dynamics::PhaseStateRot s{0.7, -0.3, 0.4, 0.6, 0.0};
    for (auto _ : state) {
        const auto obs = dqlab::su11::observables(s, p);
        benchmark::DoNotOptimize(dqlab::su11::hamiltonian(obs, d));
    }
}
BENCHMARK(BM_ObservablesPerState);

} // namespace

BENCHMARK_MAIN();
