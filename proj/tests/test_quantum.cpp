#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "dqlab/model.hpp"
#include "dqlab/quantum.hpp"
#include "dqlab/su11.hpp"

using namespace dqlab;
using namespace dqlab::quantum;
using model::OscillatorParams;

namespace {

constexpr double kPi = std::numbers::pi;

WaveFunction two_level_superposition(const Grid1D& grid, const Eigen::VectorXd& v,
                                     const OscillatorParams& p, int levels) {
    const auto basis = discrete_eigenbasis(grid, v, p.m, p.hbar, levels);
    Eigen::VectorXd sum = basis.states.col(0);
    for (int l = 1; l < levels; ++l) sum += basis.states.col(l);
    WaveFunction psi{grid, (sum / std::sqrt(static_cast<double>(levels))).cast<std::complex<double>>()};
    psi.normalize();
    return psi;
}

} // namespace

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(Grid1D::uniform(-1.0, 1.0, 8), GridTooCoarse);
    CHECK_THROWS_AS(Grid1D::uniform(1.0, -1.0, 64), ValidationError);
    const auto g = Grid1D::uniform(-8.0, 8.0, 257);
    CHECK(g.dx == doctest::Approx(16.0 / 256.0).epsilon(1e-15));
    CHECK(g.point(128) == doctest::Approx(0.0));
}

TEST_CASE("density matrix from the Gaussian ground state") {
    const auto grid = Grid1D::uniform(-8.0, 8.0, 128);
    OscillatorParams p;
    const auto psi = ho_eigenstate(grid, 0, p.m, 1.0, p.hbar);
    CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

    const auto rho = density_from_wavefunction(psi);
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rho.hermiticity_defect() < 1e-14);
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-10));
    // Real, symmetric, positive on the diagonal.
    for (int i = 0; i < grid.n; i += 13) {
        CHECK(rho.rho(i, i).real() >= 0.0);
        for (int j = 0; j < grid.n; j += 17) {
            CHECK(std::abs(rho.rho(i, j).imag()) < 1e-14);
            CHECK(rho.rho(i, j).real() == doctest::Approx(rho.rho(j, i).real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("delta-like wavefunction gives a single diagonal entry") {
    const auto grid = Grid1D::uniform(-1.0, 1.0, 32);
    WaveFunction psi{grid, Eigen::VectorXcd::Zero(32)};
    psi.psi[10] = 1.0 / std::sqrt(grid.dx);
    const auto rho = density_from_wavefunction(psi);
    CHECK(std::abs(rho.rho(10, 10)) > 0.0);
    double off = 0.0;
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j)
            if (i != 10 || j != 10) off = std::max(off, std::abs(rho.rho(i, j)));
    CHECK(off == 0.0);
}

TEST_CASE("unnormalized input is rejected") {
    const auto grid = Grid1D::uniform(-8.0, 8.0, 64);
    OscillatorParams p;
    auto psi = ho_eigenstate(grid, 0, p.m, 1.0, p.hbar);
    psi.psi *= 1.1;
    CHECK_THROWS_AS(density_from_wavefunction(psi), UnnormalizedInput);
}

TEST_CASE("stationary eigenstate density is time-independent") {
    const auto grid = Grid1D::uniform(-8.0, 8.0, 64);
    OscillatorParams p;
    const auto v = harmonic_potential(grid, p.m, 1.0);
    const auto basis = discrete_eigenbasis(grid, v, p.m, p.hbar, 1);
    WaveFunction psi{grid, basis.states.col(0).cast<std::complex<double>>()};
    psi.normalize();
    const auto rho0 = density_from_wavefunction(psi);

    auto rho = rho0;
    const DoubledEvolver evolver(grid, v, p.m, p.hbar, 0.01);
    const int steps = static_cast<int>(10.0 * 2.0 * kPi / 0.01); // 10 periods
    for (int s = 0; s < steps; ++s) evolver.step(rho);
    const double drift = (rho.rho - rho0.rho).cwiseAbs().maxCoeff();
    CHECK(drift < 1e-8);
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rho.hermiticity_defect() < 1e-8);
}

TEST_CASE("matrix evolution agrees with pure-factor evolution") {
    const auto grid = Grid1D::uniform(-8.0, 8.0, 64);
    OscillatorParams p;
    const auto v = harmonic_potential(grid, p.m, 1.0);
    auto psi = two_level_superposition(grid, v, p, 2);
    auto rho = density_from_wavefunction(psi);

    const DoubledEvolver evolver(grid, v, p.m, p.hbar, 0.01);
    Eigen::VectorXcd factor = psi.psi;
    for (int s = 0; s < 200; ++s) {
        evolver.step(rho);
        evolver.step(factor);
    }
    const Eigen::MatrixXcd from_factor = factor * factor.adjoint();
    CHECK((rho.rho - from_factor).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("trace and Hermiticity preserved through full-matrix evolution") {
    const auto grid = Grid1D::uniform(-8.0, 8.0, 64);
    OscillatorParams p;
    const auto v = harmonic_potential(grid, p.m, 1.0);
    const auto psi = two_level_superposition(grid, v, p, 2);
    const auto samples = evolve_doubled(density_from_wavefunction(psi), v, p, 0.01, 10.0, 100);
    for (const auto& rho : samples) {
        CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(rho.hermiticity_defect() < 1e-8);
    }
}

TEST_CASE("two-level off-diagonal oscillates with period 2 pi / Omega") {
    const auto grid = Grid1D::uniform(-8.0, 8.0, 256);
    OscillatorParams p;
    const auto v = harmonic_potential(grid, p.m, 1.0);
    const auto psi = two_level_superposition(grid, v, p, 2);
    const int i = static_cast<int>((0.7 + 8.0) / grid.dx);
    const int j = static_cast<int>((-0.7 + 8.0) / grid.dx);
    const double dt = 0.01;
    const auto series = evolve_entry_series(psi, v, p, dt, 4096, i, j, 2);
    const double sample_dt = 2.0 * dt;

    // Independent period estimate from upward zero crossings of the
    // detrended real part.
    std::vector<double> re(series.size());
    double mean = 0.0;
    for (std::size_t s = 0; s < series.size(); ++s) mean += series[s].real();
    mean /= static_cast<double>(series.size());
    for (std::size_t s = 0; s < series.size(); ++s) re[s] = series[s].real() - mean;
    double first = -1.0, last = -1.0;
    int crossings = 0;
    for (std::size_t s = 1; s < re.size(); ++s) {
        if (re[s - 1] < 0.0 && re[s] >= 0.0) {
            const double frac = re[s - 1] / (re[s - 1] - re[s]);
            const double t = (static_cast<double>(s - 1) + frac) * sample_dt;
            if (first < 0.0) first = t;
            last = t;
            ++crossings;
        }
    }
    REQUIRE(crossings > 5);
    const double period = (last - first) / static_cast<double>(crossings - 1);
    CHECK(std::abs(period - 2.0 * kPi) / (2.0 * kPi) < 0.01);
}

TEST_CASE("Bohr peaks: two- and three-level superpositions, stationary state") {
    const auto grid = Grid1D::uniform(-8.0, 8.0, 256);
    OscillatorParams p;
    const auto v = harmonic_potential(grid, p.m, 1.0);
    const int i = static_cast<int>((1.2 + 8.0) / grid.dx);
    const int j = static_cast<int>((-0.4 + 8.0) / grid.dx);
    const double dt = 0.01;
    const int n_samples = 1024, record_every = 5;
    const double sample_dt = dt * record_every;
    const double resolution = 2.0 * kPi / (n_samples * sample_dt);

    SUBCASE("two-level: single dominant peak at Omega") {
        const auto psi = two_level_superposition(grid, v, p, 2);
        const auto series = evolve_entry_series(psi, v, p, dt, n_samples, i, j, record_every);
        const auto peaks = bohr_frequencies(series, sample_dt, 0.25);
        REQUIRE(peaks.size() == 1);
        CHECK(std::abs(peaks[0].omega - 1.0) <= resolution);
    }

    SUBCASE("three-level: peaks at Omega and 2 Omega") {
        const auto psi = two_level_superposition(grid, v, p, 3);
        const auto series = evolve_entry_series(psi, v, p, dt, n_samples, i, j, record_every);
        const auto peaks = bohr_frequencies(series, sample_dt, 0.05);
        REQUIRE(peaks.size() >= 2);
        bool found1 = false, found2 = false;
        for (const auto& peak : peaks) {
            if (std::abs(peak.omega - 1.0) <= resolution) found1 = true;
            if (std::abs(peak.omega - 2.0) <= resolution) found2 = true;
        }
        CHECK(found1);
        CHECK(found2);
    }

    SUBCASE("stationary state: no nonzero-frequency peak") {
        const auto basis = discrete_eigenbasis(grid, v, p.m, p.hbar, 1);
        WaveFunction psi{grid, basis.states.col(0).cast<std::complex<double>>()};
        psi.normalize();
        const auto series = evolve_entry_series(psi, v, p, dt, 512, i, j, record_every);
        CHECK(bohr_frequencies(series, sample_dt).empty());
    }

    SUBCASE("insufficient samples") {
        std::vector<std::complex<double>> series(100, {1.0, 0.0});
        CHECK_THROWS_AS(bohr_frequencies(series, 0.01), InsufficientSamples);
    }
}

TEST_CASE("Wigner transform of the Gaussian ground state") {
    const auto grid = Grid1D::uniform(-8.0, 8.0, 256);
    OscillatorParams p;
    const auto psi = ho_eigenstate(grid, 0, p.m, 1.0, p.hbar);
    const auto rho = density_from_wavefunction(psi);
    const auto w = wigner_transform(rho, p.hbar);

    CHECK(w.max_imag_residue < 1e-12);
    CHECK(w.normalization() == doctest::Approx(1.0).epsilon(1e-8));

    double sup = 0.0;
    for (std::size_t ix = 0; ix < w.x.size(); ++ix)
        for (std::size_t jp = 0; jp < w.p.size(); ++jp) {
            const double exact = std::exp(-w.x[ix] * w.x[ix] - w.p[jp] * w.p[jp]) / kPi;
            sup = std::max(sup, std::abs(w.W(ix, jp) - exact));
        }
    CHECK(sup < 1e-6);

    const auto mx = x_marginal(w);
    for (int ix = 0; ix < grid.n; ++ix)
        CHECK(std::abs(mx[static_cast<std::size_t>(ix)] - std::norm(psi.psi[ix])) < 1e-8);

    const auto mp = p_marginal(w);
    for (std::size_t jp = 0; jp < w.p.size(); ++jp) {
        const double exact = std::exp(-w.p[jp] * w.p[jp]) / std::sqrt(kPi);
        CHECK(std::abs(mp[jp] - exact) < 1e-8);
    }
}

TEST_CASE("first excited Wigner function dips to -1/pi at the origin") {
    const auto grid = Grid1D::uniform(-8.0, 8.0, 257); // odd: origin on the grid
    OscillatorParams p;
    const auto psi = ho_eigenstate(grid, 1, p.m, 1.0, p.hbar);
    const auto rho = density_from_wavefunction(psi);
    const auto w = wigner_transform(rho, p.hbar);

    const double min_w = w.W.minCoeff();
    CHECK(min_w == doctest::Approx(-1.0 / kPi).epsilon(1e-6));
    // Negative region exists near the origin.
    CHECK(w.W(128, static_cast<Eigen::Index>(w.p.size()) / 2) < -0.3);
}

TEST_CASE("evolver rejects mismatched operands") {
    const auto grid = Grid1D::uniform(-4.0, 4.0, 32);
    OscillatorParams p;
    const auto v = harmonic_potential(grid, p.m, 1.0);
    const DoubledEvolver evolver(grid, v, p.m, p.hbar, 0.01);
    Eigen::VectorXcd wrong = Eigen::VectorXcd::Zero(16);
    CHECK_THROWS_AS(evolver.step(wrong), IncompatibleGrids);
    CHECK_THROWS_AS(DoubledEvolver(grid, Eigen::VectorXd::Zero(16), p.m, p.hbar, 0.01),
                    IncompatibleGrids);
    CHECK_THROWS_AS(DoubledEvolver(grid, v, p.m, p.hbar, -0.1), ValidationError);
}

TEST_CASE("radial spectrum of the isotropic oscillator") {
    OscillatorParams p; // m = k = hbar = 1 -> Omega = 1
    const auto d = model::derive_params(p);

    SUBCASE("levels {1, 3, 5} at acceptance resolution, gaps of 2 hbar Omega") {
        const auto levels = radial_spectrum(d, p.m, p.hbar, {12.0, 2000}, 3);
        CHECK(levels[0] == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(levels[1] == doctest::Approx(3.0).epsilon(1e-4));
        CHECK(levels[2] == doctest::Approx(5.0).epsilon(1e-4));
        CHECK(std::abs(levels[1] - levels[0] - 2.0 * p.hbar * d.Omega) < 1e-4);
        CHECK(std::abs(levels[2] - levels[1] - 2.0 * p.hbar * d.Omega) < 1e-4);
    }

    SUBCASE("ground level matches spectrum_level(0, alpha = 2)") {
        const auto levels = radial_spectrum(d, p.m, p.hbar, {12.0, 1000}, 1);
        const auto lvl = su11::spectrum_level(0, 2.0, d, p.hbar);
        CHECK(levels[0] == doctest::Approx(lvl.E).epsilon(1e-4));
    }

    SUBCASE("doubling Omega doubles all eigenvalues") {
        OscillatorParams p4;
        p4.k = 4.0; // Omega = 2
        const auto d4 = model::derive_params(p4);
        const auto base = radial_spectrum(d, p.m, p.hbar, {12.0, 1500}, 3);
        const auto doubled = radial_spectrum(d4, p4.m, p4.hbar, {9.0, 1500}, 3);
        for (int l = 0; l < 3; ++l)
            CHECK(doubled[static_cast<std::size_t>(l)] ==
                  doctest::Approx(2.0 * base[static_cast<std::size_t>(l)]).epsilon(2e-4));
    }

    SUBCASE("coarse grids are rejected") {
        CHECK_THROWS_AS(radial_spectrum(d, p.m, p.hbar, {12.0, 16}, 3), GridTooCoarse);
        // Large domain with few points: convergence check trips.
        CHECK_THROWS_AS(radial_spectrum(d, p.m, p.hbar, {60.0, 64}, 3), GridTooCoarse);
    }
}
