#include <benchmark/benchmark.h>

#include "dqlab/model.hpp"
#include "dqlab/quantum.hpp"

namespace {

using namespace dqlab;

void BM_DoubledStepMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto grid = quantum::Grid1D::uniform(-8.0, 8.0, n);
    model::OscillatorParams p;
    const auto v = quantum::harmonic_potential(grid, p.m, 1.0);
    const auto psi = quantum::ho_eigenstate(grid, 0, p.m, 1.0, p.hbar);
    auto rho = quantum::density_from_wavefunction(psi);
    const quantum::DoubledEvolver evolver(grid, v, p.m, p.hbar, 0.01);
    for (auto _ : state) {
        evolver.step(rho);
        benchmark::DoNotOptimize(rho.rho(0, 0));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_DoubledStepMatrix)->Arg(64)->Arg(128)->Arg(256)->Complexity();

void BM_DoubledStepFactor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto grid = quantum::Grid1D::uniform(-8.0, 8.0, n);
    model::OscillatorParams p;
    const auto v = quantum::harmonic_potential(grid, p.m, 1.0);
    auto psi = quantum::ho_eigenstate(grid, 0, p.m, 1.0, p.hbar).psi;
    const quantum::DoubledEvolver evolver(grid, v, p.m, p.hbar, 0.01);
    for (auto _ : state) {
        evolver.step(psi);
        benchmark::DoNotOptimize(psi[0]);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_DoubledStepFactor)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

void BM_WignerTransform(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto grid = quantum::Grid1D::uniform(-8.0, 8.0, n);
    model::OscillatorParams p;
    const auto psi = quantum::ho_eigenstate(grid, 0, p.m, 1.0, p.hbar);
    const auto rho = quantum::density_from_wavefunction(psi);
    for (auto _ : state) {
        auto w = quantum::wigner_transform(rho, p.hbar);
        benchmark::DoNotOptimize(w.W(0, 0));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_WignerTransform)->Arg(64)->Arg(128)->Arg(256)->Complexity();

void BM_RadialSpectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    model::OscillatorParams p;
    const auto d = model::derive_params(p);
    for (auto _ : state) {
        auto levels = quantum::radial_spectrum(d, p.m, p.hbar, {12.0, n}, 3);
        benchmark::DoNotOptimize(levels[0]);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_RadialSpectrum)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

} // namespace
