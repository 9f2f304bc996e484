// SU(1,1) observables of the doubled oscillator, the constrained
// Hamiltonian splitting, the quantized level formula and the
// thermodynamic dictionary.
//
// On the rotated chart with p1 = m v1 + (gamma/2) x2, p2 = -m v2 - (gamma/2) x1:
//
//   C  = [ (p1^2 - p2^2) + m^2 Omega^2 (x1^2 - x2^2) ] / (4 Omega m)
//   J2 = (m/2) [ (v1 x2 - v2 x1) - Gamma (x1^2 - x2^2) ] = (p1 x2 + p2 x1)/2
//
// Both Poisson-commute with H = 2 Omega C - 2 Gamma J2, which equals the
// doubled Hamiltonian m vx vy + k x y identically. Note the pseudo-Euclidean
// x1^2 - x2^2 in J2: the Euclidean combination is not a constant of motion.
#pragma once

#include "dqlab/dynamics.hpp"
#include "dqlab/model.hpp"

namespace dqlab::su11 {

struct SU11Observables {
    double C = 0.0;  // Casimir value (action units)
    double J2 = 0.0; // second generator (action units)
};

struct HooftSplit {
    double H = 0.0;   // total: 2 Omega C - 2 Gamma J2
    double HI = 0.0;  // (2 Omega C - Gamma J2)^2 / (2 Omega C)
    double HII = 0.0; // Gamma^2 J2^2 / (2 Omega C), >= 0 when C > 0
};

struct ThermoState {
    double T = 0.0; // hbar * Gamma
    double S = 0.0; // 2 J2 / hbar
    double U = 0.0; // 2 Omega C
    double F = 0.0; // U - T S = H
};

struct SpectrumLevel {
    int n = 0;
    double alpha = 0.0;
    double E = 0.0; // hbar * Omega * (n + alpha/2)
};

SU11Observables observables(const dynamics::PhaseStateRot& s, const model::OscillatorParams& p);
double casimir(const dynamics::PhaseStateRot& s, const model::OscillatorParams& p);
double j2(const dynamics::PhaseStateRot& s, const model::OscillatorParams& p);

// H = 2 Omega C - 2 Gamma J2, defined for any C.
double hamiltonian(const SU11Observables& obs, const model::DerivedParams& d);

// Full split; throws NonPositiveCasimir when C <= 0.
HooftSplit hooft_hamiltonian(const SU11Observables& obs, const model::DerivedParams& d);

// E = hbar Omega (n + alpha/2); throws NegativeIndex for n < 0.
SpectrumLevel spectrum_level(int n, double alpha, const model::DerivedParams& d, double hbar);

ThermoState thermo(const SU11Observables& obs, const model::DerivedParams& d, double hbar);

} // namespace dqlab::su11
