#include "dqlab/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dqlab::model {

void validate(const OscillatorParams& p) {
    if (!(p.m > 0.0) || !std::isfinite(p.m))
        throw NonPositiveParameter("model: mass m must be > 0, got " + std::to_string(p.m));
    if (!(p.k > 0.0) || !std::isfinite(p.k))
        throw NonPositiveParameter("model: spring constant k must be > 0, got " + std::to_string(p.k));
    if (!(p.hbar > 0.0) || !std::isfinite(p.hbar))
        throw NonPositiveParameter("model: hbar must be > 0, got " + std::to_string(p.hbar));
    if (p.gamma < 0.0 || !std::isfinite(p.gamma))
        throw NonPositiveParameter("model: damping gamma must be >= 0, got " + std::to_string(p.gamma));
}

bool is_underdamped(const OscillatorParams& p) {
    return p.k > p.gamma * p.gamma / (4.0 * p.m);
}

DerivedParams derive_params(const OscillatorParams& p) {
    validate(p);
    if (!is_underdamped(p))
        throw UnderdampedViolation("model: k <= gamma^2/(4m); k=" + std::to_string(p.k) +
                                   " gamma^2/4m=" + std::to_string(p.gamma * p.gamma / (4.0 * p.m)));

    DerivedParams d;
    d.Gamma = p.gamma / (2.0 * p.m);
    d.Omega = std::sqrt((p.k - p.gamma * p.gamma / (4.0 * p.m)) / p.m);
    d.tau = 2.0 * std::numbers::pi / d.Omega;
    d.K = p.m * d.Omega * d.Omega;
    d.B = p.gamma * p.light_c / p.charge_e;
    if (p.gamma > 0.0)
        d.L2 = p.hbar / p.gamma;
    return d;
}

} // namespace dqlab::model
