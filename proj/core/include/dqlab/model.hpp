// Physical parameters of the damped/amplified oscillator pair and the
// constants derived from them. Every other module consumes these types.
//
// Natural simulation units: hbar, c and the coupling charge default to 1
// and may be overridden. The underdamped condition k > gamma^2/(4m) is a
// hard requirement for the SU(1,1) construction and is enforced by
// derive_params().
#pragma once

#include <optional>

#include "dqlab/errors.hpp"

namespace dqlab::model {

struct OscillatorParams {
    double m = 1.0;       // mass
    double gamma = 0.0;   // damping coefficient (mass/time)
    double k = 1.0;       // spring constant (mass/time^2)
    double hbar = 1.0;    // action quantum
    double charge_e = 1.0;
    double light_c = 1.0;
};

struct DerivedParams {
    double Gamma = 0.0;        // decay rate gamma/(2m)
    double Omega = 0.0;        // reduced frequency sqrt((k - gamma^2/4m)/m)
    double tau = 0.0;          // period 2*pi/Omega
    double K = 0.0;            // effective spring m*Omega^2
    double B = 0.0;            // magnetic field gamma*c/e
    std::optional<double> L2;  // noncommutative length^2 = hbar/gamma; absent at gamma = 0
};

// Throws NonPositiveParameter on m, k or hbar <= 0 or gamma < 0.
void validate(const OscillatorParams& p);

bool is_underdamped(const OscillatorParams& p);

// Throws UnderdampedViolation when k <= gamma^2/(4m).
DerivedParams derive_params(const OscillatorParams& p);

} // namespace dqlab::model
