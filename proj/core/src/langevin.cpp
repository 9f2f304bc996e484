#include "dqlab/langevin.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "dqlab/rng.hpp"

namespace dqlab::langevin {

namespace {

std::vector<double> trapezoid_weights(const std::vector<double>& times) {
    const std::size_t n = times.size();
    if (n < 2) throw ValidationError("langevin: path needs at least two samples");
    const double dt = times[1] - times[0];
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (std::abs((times[i + 1] - times[i]) - dt) > 1e-12 * std::max(1.0, std::abs(dt)))
            throw IncompatibleGrids("langevin: path grid is not uniform");
    std::vector<double> w(n, dt);
    w.front() = 0.5 * dt;
    w.back() = 0.5 * dt;
    return w;
}

} // namespace

Ensemble simulate_langevin(const model::OscillatorParams& p, const LangevinConfig& cfg) {
    model::validate(p);
    if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0))
        throw ValidationError("langevin: dt and t_end must be > 0");
    if (cfg.n_paths < 1) throw ValidationError("langevin: n_paths must be >= 1");
    if (cfg.kBT < 0.0) throw ValidationError("langevin: kBT must be >= 0");

    const auto n_steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    const double noise_amp = std::sqrt(2.0 * p.gamma * cfg.kBT * cfg.dt) / p.m;

    Ensemble ens;
    ens.params = p;
    ens.kBT = cfg.kBT;
    ens.dt = cfg.dt;
    ens.seed = cfg.seed;
    ens.paths.resize(static_cast<std::size_t>(cfg.n_paths));

    for (std::size_t ip = 0; ip < ens.paths.size(); ++ip) {
        auto& path = ens.paths[ip];
        path.stream_seed = rng::stream_seed(cfg.seed, ip);
        rng::NormalStream normal(path.stream_seed);

        double x = cfg.x0, v = cfg.v0;
        auto record = [&](std::size_t step) {
            path.times.push_back(static_cast<double>(step) * cfg.dt);
            path.x.push_back(x);
            path.v.push_back(v);
        };
        record(0);
        for (std::size_t step = 0; step < n_steps; ++step) {
            const double force = -p.gamma * v - (cfg.with_spring ? p.k * x : 0.0);
            const double v_next = v + force * cfg.dt / p.m + noise_amp * normal.next();
            x += v * cfg.dt;
            v = v_next;
            const bool at_stride = cfg.record_stride > 0 &&
                                   (step + 1) % static_cast<std::size_t>(cfg.record_stride) == 0;
            if (at_stride || step + 1 == n_steps) record(step + 1);
        }
    }
    return ens;
}

VarianceSummary velocity_variance(const Ensemble& e) {
    VarianceSummary s;
    s.n_paths = static_cast<int>(e.paths.size());
    if (s.n_paths == 0) return s;
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& path : e.paths) {
        const double v2 = path.v.back() * path.v.back();
        sum += v2;
        sum_sq += v2 * v2;
    }
    const double n = static_cast<double>(s.n_paths);
    s.mean_v2 = sum / n;
    if (s.n_paths > 1) {
        const double var = (sum_sq - n * s.mean_v2 * s.mean_v2) / (n - 1.0);
        s.stderr_v2 = std::sqrt(std::max(var, 0.0) / n);
    }
    return s;
}

dynamics::TrajectoryXY y_system_check(const model::OscillatorParams& p, double y0, double vy0,
                                      double dt, double t_end) {
    model::validate(p);
    // m y'' = +gamma y'; x-subsystem frozen at zero.
    const auto eom = [&p](const dynamics::PhaseStateXY& s) -> dynamics::StateDeriv {
        return {0.0, s.vy, 0.0, p.gamma * s.vy / p.m};
    };
    return dynamics::integrate(eom, dynamics::PhaseStateXY{0.0, y0, 0.0, vy0, 0.0}, dt, t_end);
}

std::vector<std::vector<double>> kernel_matrix(const std::vector<double>& times,
                                               const NoiseKernel& kernel) {
    const auto w = trapezoid_weights(times);
    const std::size_t n = times.size();
    std::vector<std::vector<double>> K(n, std::vector<double>(n, 0.0));

    if (const auto* white = std::get_if<WhiteNoise>(&kernel)) {
        if (white->N0 < 0.0) throw ValidationError("langevin: white-noise strength must be >= 0");
        for (std::size_t i = 0; i < n; ++i) K[i][i] = white->N0 / w[i];
        return K;
    }

    const auto& sampled = std::get<SampledKernel>(kernel);
    const double dt = times[1] - times[0];
    if (!(sampled.dlag > 0.0) ||
        std::abs(sampled.dlag - dt) > 1e-12 * std::max(1.0, std::abs(dt)))
        throw IncompatibleGrids("langevin: kernel lag spacing " + std::to_string(sampled.dlag) +
                                " does not match path dt " + std::to_string(dt));
    if (sampled.values.size() < n)
        throw IncompatibleGrids("langevin: kernel covers " + std::to_string(sampled.values.size()) +
                                " lags, path needs " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            K[i][j] = sampled.values[i >= j ? i - j : j - i];
    return K;
}

double imaginary_action(const std::vector<double>& times, const std::vector<double>& y,
                        const NoiseKernel& kernel, double hbar) {
    if (times.size() != y.size())
        throw IncompatibleGrids("langevin: times and y have different lengths");
    if (!(hbar > 0.0)) throw ValidationError("langevin: hbar must be > 0");
    const auto w = trapezoid_weights(times);
    const std::size_t n = times.size();

    if (const auto* white = std::get_if<WhiteNoise>(&kernel)) {
        // Analytic reduction (N0 / 2 hbar) Int y^2 dt.
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += w[i] * y[i] * y[i];
        return 0.5 * white->N0 * acc / hbar;
    }
    return imaginary_action_quadrature(times, y, kernel, hbar);
}

double imaginary_action_quadrature(const std::vector<double>& times, const std::vector<double>& y,
                                   const NoiseKernel& kernel, double hbar) {
    if (times.size() != y.size())
        throw IncompatibleGrids("langevin: times and y have different lengths");
    if (!(hbar > 0.0)) throw ValidationError("langevin: hbar must be > 0");
    const auto w = trapezoid_weights(times);
    const auto K = kernel_matrix(times, kernel);
    const std::size_t n = times.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += K[i][j] * w[j] * y[j];
        acc += w[i] * y[i] * row;
    }
    return 0.5 * acc / hbar;
}

} // namespace dqlab::langevin
