#include "dqlab/su11.hpp"

#include <string>

namespace dqlab::su11 {

SU11Observables observables(const dynamics::PhaseStateRot& s, const model::OscillatorParams& p) {
    const auto d = model::derive_params(p); // throws UnderdampedViolation
    const auto [p1, p2] = dynamics::canonical_momenta(s, p);
    const double pseudo_x2 = s.x1 * s.x1 - s.x2 * s.x2;
    SU11Observables obs;
    obs.C = ((p1 * p1 - p2 * p2) + p.m * p.m * d.Omega * d.Omega * pseudo_x2) / (4.0 * d.Omega * p.m);
    obs.J2 = 0.5 * p.m * ((s.v1 * s.x2 - s.v2 * s.x1) - d.Gamma * pseudo_x2);
    return obs;
}

double casimir(const dynamics::PhaseStateRot& s, const model::OscillatorParams& p) {
    return observables(s, p).C;
}

double j2(const dynamics::PhaseStateRot& s, const model::OscillatorParams& p) {
    return observables(s, p).J2;
}

double hamiltonian(const SU11Observables& obs, const model::DerivedParams& d) {
    return 2.0 * d.Omega * obs.C - 2.0 * d.Gamma * obs.J2;
}

HooftSplit hooft_hamiltonian(const SU11Observables& obs, const model::DerivedParams& d) {
    if (!(obs.C > 0.0))
        throw NonPositiveCasimir("su11: splitting requires C > 0, got C=" + std::to_string(obs.C));
    HooftSplit split;
    split.H = hamiltonian(obs, d);
    const double two_omega_c = 2.0 * d.Omega * obs.C;
    const double a = two_omega_c - d.Gamma * obs.J2;
    split.HI = a * a / two_omega_c;
    split.HII = d.Gamma * d.Gamma * obs.J2 * obs.J2 / two_omega_c;
    return split;
}

SpectrumLevel spectrum_level(int n, double alpha, const model::DerivedParams& d, double hbar) {
    if (n < 0) throw NegativeIndex("su11: spectrum_level requires n >= 0, got " + std::to_string(n));
    return {n, alpha, hbar * d.Omega * (static_cast<double>(n) + 0.5 * alpha)};
}

ThermoState thermo(const SU11Observables& obs, const model::DerivedParams& d, double hbar) {
    ThermoState th;
    th.T = hbar * d.Gamma;
    th.S = 2.0 * obs.J2 / hbar;
    th.U = 2.0 * d.Omega * obs.C;
    th.F = th.U - th.T * th.S;
    return th;
}

} // namespace dqlab::su11
