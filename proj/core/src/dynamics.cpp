#include "dqlab/dynamics.hpp"

#include <cmath>

namespace dqlab::dynamics {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_finite(std::initializer_list<double> vals, const char* what) {
    for (double v : vals)
        if (!std::isfinite(v)) throw ValidationError(std::string("dynamics: non-finite ") + what);
}

} // namespace

StateDeriv eom_xy(const PhaseStateXY& s, const model::OscillatorParams& p) {
    require_finite({s.x, s.y, s.vx, s.vy}, "XY state");
    return {s.vx, s.vy, (-p.gamma * s.vx - p.k * s.x) / p.m, (p.gamma * s.vy - p.k * s.y) / p.m};
}

StateDeriv eom_rot(const PhaseStateRot& s, const model::OscillatorParams& p) {
    require_finite({s.x1, s.x2, s.v1, s.v2}, "rotated state");
    return {s.v1, s.v2, -(p.gamma * s.v2 + p.k * s.x1) / p.m, -(p.gamma * s.v1 + p.k * s.x2) / p.m};
}

PhaseStateRot to_rotated(const PhaseStateXY& s) {
    require_finite({s.x, s.y, s.vx, s.vy}, "XY state");
    return {(s.x + s.y) * kInvSqrt2, (s.x - s.y) * kInvSqrt2,
            (s.vx + s.vy) * kInvSqrt2, (s.vx - s.vy) * kInvSqrt2, s.t};
}

PhaseStateXY from_rotated(const PhaseStateRot& s) {
    require_finite({s.x1, s.x2, s.v1, s.v2}, "rotated state");
    return {(s.x1 + s.x2) * kInvSqrt2, (s.x1 - s.x2) * kInvSqrt2,
            (s.v1 + s.v2) * kInvSqrt2, (s.v1 - s.v2) * kInvSqrt2, s.t};
}

std::pair<double, double> canonical_momenta(const PhaseStateRot& s, const model::OscillatorParams& p) {
    return {p.m * s.v1 + 0.5 * p.gamma * s.x2, -p.m * s.v2 - 0.5 * p.gamma * s.x1};
}

GaugeData gauge_data(const PhaseStateRot& s, const model::OscillatorParams& p) {
    if (p.charge_e == 0.0) throw ZeroCharge("dynamics: gauge_data requires charge_e != 0");
    GaugeData g;
    g.B = p.gamma * p.light_c / p.charge_e;
    g.A1 = 0.5 * g.B * s.x2;  // eps_12 = +1
    g.A2 = -0.5 * g.B * s.x1; // eps_21 = -1
    g.Phi = 0.5 * p.k / p.charge_e * (s.x1 * s.x1 - s.x2 * s.x2);
    return g;
}

double lagrangian_xy(const PhaseStateXY& s, const model::OscillatorParams& p) {
    return p.m * s.vx * s.vy + 0.5 * p.gamma * (s.x * s.vy - s.y * s.vx) - p.k * s.x * s.y;
}

double hamiltonian_xy(const PhaseStateXY& s, const model::OscillatorParams& p) {
    return p.m * s.vx * s.vy + p.k * s.x * s.y;
}

TrajectoryXY integrate_xy(const PhaseStateXY& s0, const model::OscillatorParams& p, double dt,
                          double t_end, const IntegrateOptions& opt) {
    model::validate(p);
    return integrate([&p](const PhaseStateXY& s) { return eom_xy(s, p); }, s0, dt, t_end, opt);
}

TrajectoryRot integrate_rot(const PhaseStateRot& s0, const model::OscillatorParams& p, double dt,
                            double t_end, const IntegrateOptions& opt) {
    model::validate(p);
    return integrate([&p](const PhaseStateRot& s) { return eom_rot(s, p); }, s0, dt, t_end, opt);
}

} // namespace dqlab::dynamics
