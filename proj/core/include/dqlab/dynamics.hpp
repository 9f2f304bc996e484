// Classical dynamics of the doubled oscillator pair
//
//   m x'' + gamma x' + k x = 0        (damped)
//   m y'' - gamma y' + k y = 0        (time-reversed, amplified)
//
// in the (x, y) chart and in the rotated chart x1 = (x+y)/sqrt(2),
// x2 = (x-y)/sqrt(2), where the pair turns into two oscillators coupled
// through the damping:
//
//   m x1'' + gamma x2' + k x1 = 0,    m x2'' + gamma x1' + k x2 = 0.
//
// The module also evaluates the doubled Lagrangian/Hamiltonian, the
// canonical momenta p1 = m v1 + (gamma/2) x2, p2 = -m v2 - (gamma/2) x1,
// and the gauge-potential reformulation A_i = (B/2) eps_ij x_j with
// B = gamma c/e (eps_12 = -eps_21 = 1).
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "dqlab/errors.hpp"
#include "dqlab/model.hpp"

namespace dqlab::dynamics {

enum class Chart { XY, Rot };

struct PhaseStateXY {
    double x = 0.0, y = 0.0;
    double vx = 0.0, vy = 0.0;
    double t = 0.0;
    static constexpr Chart chart = Chart::XY;
};

struct PhaseStateRot {
    double x1 = 0.0, x2 = 0.0;
    double v1 = 0.0, v2 = 0.0;
    double t = 0.0;
    static constexpr Chart chart = Chart::Rot;
};

// Time derivative of a phase state (same layout, no time entry).
struct StateDeriv {
    double d_pos_a = 0.0, d_pos_b = 0.0;
    double d_vel_a = 0.0, d_vel_b = 0.0;
};

StateDeriv eom_xy(const PhaseStateXY& s, const model::OscillatorParams& p);
StateDeriv eom_rot(const PhaseStateRot& s, const model::OscillatorParams& p);

PhaseStateRot to_rotated(const PhaseStateXY& s);
PhaseStateXY from_rotated(const PhaseStateRot& s);

// (p1, p2) conjugate to (x1, x2) of the rotated-chart Lagrangian.
std::pair<double, double> canonical_momenta(const PhaseStateRot& s, const model::OscillatorParams& p);

struct GaugeData {
    double A1 = 0.0, A2 = 0.0; // vector potential components
    double B = 0.0;            // field magnitude, curl A = -B
    double Phi = 0.0;          // scalar potential (k/2e)(x1^2 - x2^2)
};

GaugeData gauge_data(const PhaseStateRot& s, const model::OscillatorParams& p);

// L = m vx vy + (gamma/2)(x vy - y vx) - k x y
double lagrangian_xy(const PhaseStateXY& s, const model::OscillatorParams& p);
// H = m vx vy + k x y (Legendre transform of the above; conserved by the flow)
double hamiltonian_xy(const PhaseStateXY& s, const model::OscillatorParams& p);

enum class Method { RK4, Adaptive };

struct IntegrateOptions {
    Method method = Method::RK4;
    double rel_tol = 1e-10; // adaptive only
    double abs_tol = 1e-12; // adaptive only
};

template <class State>
struct Trajectory {
    std::vector<State> states; // sampled at t = i*dt, strictly increasing
    double dt = 0.0;           // nominal sample step
    static constexpr Chart chart = State::chart;
};

using TrajectoryXY = Trajectory<PhaseStateXY>;
using TrajectoryRot = Trajectory<PhaseStateRot>;

namespace detail {

using Vec4 = std::array<double, 4>;

template <class State> Vec4 pack(const State& s);
template <> inline Vec4 pack<PhaseStateXY>(const PhaseStateXY& s) { return {s.x, s.y, s.vx, s.vy}; }
template <> inline Vec4 pack<PhaseStateRot>(const PhaseStateRot& s) { return {s.x1, s.x2, s.v1, s.v2}; }

template <class State> State unpack(const Vec4& v, double t);
template <> inline PhaseStateXY unpack<PhaseStateXY>(const Vec4& v, double t) {
    return {v[0], v[1], v[2], v[3], t};
}
template <> inline PhaseStateRot unpack<PhaseStateRot>(const Vec4& v, double t) {
    return {v[0], v[1], v[2], v[3], t};
}

inline Vec4 deriv_vec(const StateDeriv& d) { return {d.d_pos_a, d.d_pos_b, d.d_vel_a, d.d_vel_b}; }

// One classic RK4 step of size h. F: (Vec4, t) -> Vec4.
template <class F>
Vec4 rk4_step(const F& f, const Vec4& u, double t, double h) {
    const Vec4 k1 = f(u, t);
    Vec4 tmp;
    for (int i = 0; i < 4; ++i) tmp[i] = u[i] + 0.5 * h * k1[i];
    const Vec4 k2 = f(tmp, t + 0.5 * h);
    for (int i = 0; i < 4; ++i) tmp[i] = u[i] + 0.5 * h * k2[i];
    const Vec4 k3 = f(tmp, t + 0.5 * h);
    for (int i = 0; i < 4; ++i) tmp[i] = u[i] + h * k3[i];
    const Vec4 k4 = f(tmp, t + h);
    Vec4 out;
    for (int i = 0; i < 4; ++i)
        out[i] = u[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

// Dormand-Prince 5(4) embedded step: returns (5th-order result, error estimate).
template <class F>
std::pair<Vec4, Vec4> dopri45_step(const F& f, const Vec4& u, double t, double h) {
    // Butcher tableau, standard DOPRI5 coefficients.
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const Vec4 k1 = f(u, t);
    Vec4 w;
    for (int i = 0; i < 4; ++i) w[i] = u[i] + h * a21 * k1[i];
    const Vec4 k2 = f(w, t + c2 * h);
    for (int i = 0; i < 4; ++i) w[i] = u[i] + h * (a31 * k1[i] + a32 * k2[i]);
    const Vec4 k3 = f(w, t + c3 * h);
    for (int i = 0; i < 4; ++i) w[i] = u[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    const Vec4 k4 = f(w, t + c4 * h);
    for (int i = 0; i < 4; ++i)
        w[i] = u[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    const Vec4 k5 = f(w, t + c5 * h);
    for (int i = 0; i < 4; ++i)
        w[i] = u[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const Vec4 k6 = f(w, t + h);
    Vec4 y5;
    for (int i = 0; i < 4; ++i)
        y5[i] = u[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    const Vec4 k7 = f(y5, t + h);
    Vec4 err;
    for (int i = 0; i < 4; ++i)
        err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    return {y5, err};
}

// Advance from t0 to t1 with adaptive DOPRI45 steps; throws StepUnderflow.
template <class F>
Vec4 advance_adaptive(const F& f, Vec4 u, double t0, double t1, double rel_tol, double abs_tol,
                      double& h_hint) {
    const double span = t1 - t0;
    const double h_floor = 1e-14 * std::max(std::abs(t1), 1.0);
    double t = t0;
    double h = std::min(h_hint > 0 ? h_hint : span, span);
    while (t < t1) {
        if (h < h_floor)
            throw StepUnderflow("dynamics: adaptive step collapsed below floor at t=" +
                                std::to_string(t));
        const bool last = (t + h >= t1);
        const double h_try = last ? (t1 - t) : h;
        auto [y, err] = dopri45_step(f, u, t, h_try);
        double err_norm = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double scale = abs_tol + rel_tol * std::max(std::abs(u[i]), std::abs(y[i]));
            const double r = err[i] / scale;
            err_norm += r * r;
        }
        err_norm = std::sqrt(err_norm / 4.0);
        if (err_norm <= 1.0) {
            t += h_try;
            u = y;
            const double grow = err_norm > 0 ? 0.9 * std::pow(err_norm, -0.2) : 5.0;
            h = h_try * std::min(5.0, std::max(0.2, grow));
        } else {
            h = h_try * std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
        }
    }
    h_hint = h;
    return u;
}

} // namespace detail

// Integrate an arbitrary equation of motion sampled on the lattice t = i*dt.
// Eom: (const State&) -> StateDeriv. The adaptive method lands exactly on
// every lattice point (no interpolation), controlling local error against
// rel_tol/abs_tol; RK4 takes one fixed step per lattice interval of dt.
template <class State, class Eom>
Trajectory<State> integrate(Eom&& eom, const State& s0, double dt, double t_end,
                            const IntegrateOptions& opt = {}) {
    if (!(dt > 0.0) || !(t_end > 0.0))
        throw ValidationError("dynamics: integrate requires dt > 0 and t_end > 0");

    const auto f = [&](const detail::Vec4& u, double t) -> detail::Vec4 {
        return detail::deriv_vec(eom(detail::unpack<State>(u, t)));
    };

    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / dt));
    Trajectory<State> traj;
    traj.dt = dt;
    traj.states.reserve(n_steps + 1);

    detail::Vec4 u = detail::pack(s0);
    traj.states.push_back(detail::unpack<State>(u, 0.0));
    double h_hint = 0.0;
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double t0 = static_cast<double>(i) * dt;
        const double t1 = static_cast<double>(i + 1) * dt;
        if (opt.method == Method::RK4)
            u = detail::rk4_step(f, u, t0, t1 - t0);
        else
            u = detail::advance_adaptive(f, u, t0, t1, opt.rel_tol, opt.abs_tol, h_hint);
        traj.states.push_back(detail::unpack<State>(u, t1));
    }
    return traj;
}

TrajectoryXY integrate_xy(const PhaseStateXY& s0, const model::OscillatorParams& p, double dt,
                          double t_end, const IntegrateOptions& opt = {});
TrajectoryRot integrate_rot(const PhaseStateRot& s0, const model::OscillatorParams& p, double dt,
                            double t_end, const IntegrateOptions& opt = {});

} // namespace dqlab::dynamics
