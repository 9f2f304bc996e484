// Classical Brownian sector: Euler-Maruyama ensembles for
//
//   m dv = (-gamma v [- k x if a spring is configured]) dt + sqrt(2 gamma kBT dt) xi,
//
// the noiseless amplified y-equation m y'' - gamma y' = 0, and the
// imaginary-action functional
//
//   Im S = (1/2 hbar) Int Int N(t-s) y(t) y(s) dt ds
//
// evaluated by trapezoid double quadrature. A white-noise kernel
// N(t-s) = N0 delta(t-s) is discretized as N0/w_i on the diagonal, where
// w_i is the trapezoid weight (N0/dt at interior nodes), which makes the
// double quadrature agree with the analytic reduction (N0/2 hbar) Int y^2 dt
// to rounding.
//
// Each path draws from its own stream derived from (seed, path index), so
// paths are replayable and may be generated in parallel; aggregation is a
// pure reduction over the recorded paths.
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "dqlab/dynamics.hpp"
#include "dqlab/errors.hpp"
#include "dqlab/model.hpp"

namespace dqlab::langevin {

struct WhiteNoise {
    double N0 = 0.0; // >= 0
};

// N(|t-s|) sampled on the uniform lag grid {0, dlag, 2*dlag, ...};
// symmetric in its argument by construction.
struct SampledKernel {
    double dlag = 0.0;
    std::vector<double> values;
};

using NoiseKernel = std::variant<WhiteNoise, SampledKernel>;

struct StochasticPath {
    std::vector<double> times;
    std::vector<double> x;
    std::vector<double> v;
    std::uint64_t stream_seed = 0; // per-path RNG stream, recorded for replay
};

struct Ensemble {
    std::vector<StochasticPath> paths;
    model::OscillatorParams params;
    double kBT = 0.0;
    double dt = 0.0;
    std::uint64_t seed = 0;
};

struct LangevinConfig {
    double kBT = 1.0;
    double dt = 1e-3;
    double t_end = 10.0;
    int n_paths = 1;
    std::uint64_t seed = 0;
    bool with_spring = false; // default is the free Brownian form
    int record_stride = 0;    // 0: record initial and final samples only
    double x0 = 0.0;
    double v0 = 0.0;
};

Ensemble simulate_langevin(const model::OscillatorParams& p, const LangevinConfig& cfg);

struct VarianceSummary {
    int n_paths = 0;
    double mean_v2 = 0.0;   // ensemble <v^2> at t_end
    double stderr_v2 = 0.0; // standard error of the mean
};

VarianceSummary velocity_variance(const Ensemble& e);

// Integrates m y'' - gamma y' = 0 (RK4) and returns the sampled trajectory
// in the XY chart with the x-subsystem identically zero.
dynamics::TrajectoryXY y_system_check(const model::OscillatorParams& p, double y0, double vy0,
                                      double dt, double t_end);

// Im S over a sampled path on the uniform grid `times`. White noise takes
// the analytic reduction; sampled kernels go through the double quadrature.
double imaginary_action(const std::vector<double>& times, const std::vector<double>& y,
                        const NoiseKernel& kernel, double hbar);

// Same functional, always evaluated by the generic double quadrature over
// the dense kernel matrix; kept as the cross-check route for the reduction.
double imaginary_action_quadrature(const std::vector<double>& times, const std::vector<double>& y,
                                   const NoiseKernel& kernel, double hbar);

// Dense symmetric kernel matrix K_ij = N(t_i - t_j) on the path grid
// (diagonal delta discretization for WhiteNoise); used by the quadrature
// and exposed for positivity checks.
std::vector<std::vector<double>> kernel_matrix(const std::vector<double>& times,
                                               const NoiseKernel& kernel);

} // namespace dqlab::langevin
