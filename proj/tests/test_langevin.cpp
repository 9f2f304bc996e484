#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "dqlab/langevin.hpp"
#include "dqlab/rng.hpp"

using namespace dqlab;
using namespace dqlab::langevin;
using model::OscillatorParams;

TEST_CASE("noiseless decay: v(t) = exp(-t)") {
    OscillatorParams p;
    p.gamma = 1.0;
    LangevinConfig cfg;
    cfg.kBT = 0.0;
    cfg.dt = 1e-4;
    cfg.t_end = 3.0;
    cfg.n_paths = 1;
    cfg.v0 = 1.0;
    cfg.record_stride = 1000;
    const auto ens = simulate_langevin(p, cfg);
    for (std::size_t s = 0; s < ens.paths[0].times.size(); ++s) {
        const double t = ens.paths[0].times[s];
        CHECK(std::abs(ens.paths[0].v[s] - std::exp(-t)) < 1e-3);
    }
}

TEST_CASE("equipartition at modest ensemble size") {
    OscillatorParams p;
    p.gamma = 1.0;
    LangevinConfig cfg;
    cfg.kBT = 1.0;
    cfg.dt = 1e-3;
    cfg.t_end = 10.0;
    cfg.n_paths = 2000;
    cfg.seed = 99;
    const auto summary = velocity_variance(simulate_langevin(p, cfg));
    CHECK(std::abs(summary.mean_v2 - 1.0) < 3.0 * summary.stderr_v2);
    CHECK(summary.stderr_v2 < 0.05);
}

TEST_CASE("standard error scales like 1/sqrt(n_paths)") {
    OscillatorParams p;
    p.gamma = 1.0;
    LangevinConfig cfg;
    cfg.kBT = 1.0;
    cfg.dt = 2e-3;
    cfg.t_end = 2.0;
    cfg.seed = 5;
    cfg.n_paths = 2000;
    const auto small = velocity_variance(simulate_langevin(p, cfg));
    cfg.n_paths = 8000;
    const auto large = velocity_variance(simulate_langevin(p, cfg));
    const double ratio = large.stderr_v2 / small.stderr_v2;
    CHECK(ratio > 0.35);
    CHECK(ratio < 0.65); // target 0.5 = sqrt(2000/8000)
}

TEST_CASE("discrete noise autocorrelation matches 2 gamma kBT / dt") {
    // The simulator draws force kicks f_i = sqrt(2 gamma kBT / dt) xi_i; check
    // the stream statistics directly.
    const double gamma = 0.7, kBT = 1.3, dt = 1e-2;
    const double f2_expected = 2.0 * gamma * kBT / dt;
    rng::NormalStream stream(rng::stream_seed(12345, 0));
    const int n = 200000;
    std::vector<double> f(n);
    for (int i = 0; i < n; ++i) f[i] = std::sqrt(f2_expected) * stream.next();
    double same = 0.0, lag1 = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        same += f[i] * f[i];
        lag1 += f[i] * f[i + 1];
    }
    same /= n - 1;
    lag1 /= n - 1;
    // Var(f^2) = 2 f2^2 -> SE of the mean ~ f2 sqrt(2/n).
    const double se = f2_expected * std::sqrt(2.0 / n);
    CHECK(std::abs(same - f2_expected) < 4.0 * se);
    CHECK(std::abs(lag1) < 4.0 * f2_expected / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("replay determinism: identical seeds give bit-identical ensembles") {
    OscillatorParams p;
    p.gamma = 0.5;
    LangevinConfig cfg;
    cfg.kBT = 0.8;
    cfg.dt = 1e-3;
    cfg.t_end = 1.0;
    cfg.n_paths = 50;
    cfg.seed = 777;
    cfg.record_stride = 100;
    const auto a = simulate_langevin(p, cfg);
    const auto b = simulate_langevin(p, cfg);
    REQUIRE(a.paths.size() == b.paths.size());
    for (std::size_t i = 0; i < a.paths.size(); ++i) {
        CHECK(a.paths[i].stream_seed == b.paths[i].stream_seed);
        for (std::size_t s = 0; s < a.paths[i].v.size(); ++s) {
            CHECK(a.paths[i].v[s] == b.paths[i].v[s]);
            CHECK(a.paths[i].x[s] == b.paths[i].x[s]);
        }
    }
}

TEST_CASE("y-system: fixed point, exponential growth, free motion") {
    OscillatorParams p;
    p.gamma = 1.0;

    const auto fixed = y_system_check(p, 2.5, 0.0, 1e-3, 2.0);
    for (const auto& s : fixed.states) CHECK(s.y == doctest::Approx(2.5).epsilon(1e-12));

    const auto growing = y_system_check(p, 0.0, 1.0, 1e-4, 3.0);
    for (const auto& s : growing.states)
        CHECK(std::abs(s.vy - std::exp(s.t)) < 1e-6 * std::exp(s.t));

    OscillatorParams free_p; // gamma = 0
    const auto free_traj = y_system_check(free_p, 1.0, 0.5, 1e-3, 2.0);
    for (const auto& s : free_traj.states)
        CHECK(s.y == doctest::Approx(1.0 + 0.5 * s.t).epsilon(1e-10));
}

TEST_CASE("imaginary action: white-noise worked values") {
    const int n = 1001;
    std::vector<double> t(n), ones(n, 1.0), zero(n, 0.0);
    for (int i = 0; i < n; ++i) t[i] = 1e-3 * i;

    const NoiseKernel white = WhiteNoise{2.0};
    CHECK(imaginary_action(t, zero, white, 1.0) == 0.0);
    CHECK(imaginary_action(t, ones, white, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    // Reduction and generic double quadrature agree.
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) y[i] = std::sin(5.0 * t[i]) - 0.3;
    const double a = imaginary_action(t, y, white, 0.7);
    const double b = imaginary_action_quadrature(t, y, white, 0.7);
    CHECK(std::abs(a - b) < 1e-12 * std::abs(a));
}

TEST_CASE("imaginary action is an exact quadratic form") {
    const int n = 501;
    std::vector<double> t(n), y(n), y2(n), y3(n);
    for (int i = 0; i < n; ++i) {
        t[i] = 2e-3 * i;
        y[i] = std::cos(4.0 * t[i]) * t[i];
        y2[i] = 2.0 * y[i];
        y3[i] = 3.0 * y[i];
    }
    const NoiseKernel white = WhiteNoise{1.4};
    const double base = imaginary_action(t, y, white, 1.0);
    CHECK(imaginary_action(t, y2, white, 1.0) == 4.0 * base); // powers of two: exact
    CHECK(imaginary_action(t, y3, white, 1.0) == doctest::Approx(9.0 * base).epsilon(1e-14));
}

TEST_CASE("positive semidefinite sampled kernel gives Im S >= 0") {
    const int n = 64;
    const double dt = 0.05;
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = dt * i;

    // Gaussian kernel exp(-lag^2): positive definite.
    SampledKernel kernel;
    kernel.dlag = dt;
    kernel.values.resize(n);
    for (int i = 0; i < n; ++i) kernel.values[i] = std::exp(-t[i] * t[i]);
    const NoiseKernel k = kernel;

    // Oracle: eigendecomposition of the weighted kernel matrix.
    const auto K = kernel_matrix(t, k);
    Eigen::MatrixXd km(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) km(i, j) = K[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(km);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);

    rng::SplitMix64 gen(31);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i) y[i] = gen.next_symmetric();
        CHECK(imaginary_action(t, y, k, 1.0) >= -1e-12);
    }
}

TEST_CASE("Im S / hbar diverges monotonically in the classical limit") {
    const int n = 101;
    std::vector<double> t(n), y(n);
    for (int i = 0; i < n; ++i) {
        t[i] = 0.01 * i;
        y[i] = 1.0 + t[i];
    }
    const NoiseKernel white = WhiteNoise{1.0};
    double prev = 0.0;
    for (double hbar = 1.0; hbar > 1e-6; hbar *= 0.1) {
        const double v = imaginary_action(t, y, white, hbar);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev > 1e5);
}

TEST_CASE("grid mismatch errors") {
    std::vector<double> t = {0.0, 0.1, 0.2, 0.3};
    std::vector<double> y = {1.0, 1.0, 1.0};
    const NoiseKernel white = WhiteNoise{1.0};
    CHECK_THROWS_AS(imaginary_action(t, y, white, 1.0), IncompatibleGrids);

    std::vector<double> y4 = {1.0, 1.0, 1.0, 1.0};
    SampledKernel k;
    k.dlag = 0.05; // mismatched lag spacing
    k.values = {1.0, 0.5, 0.2, 0.1};
    CHECK_THROWS_AS(imaginary_action(t, y4, NoiseKernel{k}, 1.0), IncompatibleGrids);

    SampledKernel short_k;
    short_k.dlag = 0.1;
    short_k.values = {1.0, 0.5}; // too few lags
    CHECK_THROWS_AS(imaginary_action(t, y4, NoiseKernel{short_k}, 1.0), IncompatibleGrids);

    std::vector<double> bad_t = {0.0, 0.1, 0.25, 0.3}; // non-uniform
    CHECK_THROWS_AS(imaginary_action(bad_t, y4, white, 1.0), IncompatibleGrids);
}
