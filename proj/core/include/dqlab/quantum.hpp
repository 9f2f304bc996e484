// Doubled density-matrix quantum mechanics on a 1D grid.
//
// The density matrix rho(x+, x-) evolves under two copies of the
// Schroedinger equation, i hbar d rho/dt = H rho - rho H with
// H = -(hbar^2/2m) d^2/dx^2 + V(x) discretized by second-order central
// differences (hard walls at the grid ends). Stepping uses the
// Crank-Nicolson Cayley transform U = (1 + i dt H/2hbar)^-1 (1 - i dt H/2hbar)
// applied to each index, which is unitary for Hermitian H, so trace and
// Hermiticity are preserved to rounding. Pure states may be evolved as a
// single wavefunction factor instead of the full matrix.
//
// The Wigner transform, Bohr-frequency peak extraction and the l=0 radial
// eigensolver of the two-dimensional isotropic oscillator live here too.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dqlab/errors.hpp"
#include "dqlab/model.hpp"

namespace dqlab::quantum {

struct Grid1D {
    double x_min = 0.0;
    double x_max = 0.0;
    int n = 0;
    double dx = 0.0;

    static Grid1D uniform(double x_min, double x_max, int n);
    double point(int i) const { return x_min + dx * static_cast<double>(i); }
    std::vector<double> points() const;
};

struct WaveFunction {
    Grid1D grid;
    Eigen::VectorXcd psi;

    // Discrete norm^2: sum |psi_i|^2 dx.
    double norm_sq() const;
    WaveFunction& normalize();
};

struct DensityMatrix {
    Grid1D grid;
    Eigen::MatrixXcd rho; // rho(i, j) ~ <x+ = x_i | rho | x- = x_j>

    double trace() const; // Re sum rho_ii dx
    double hermiticity_defect() const;
    double purity() const; // Tr(rho^2) dx^2
};

struct WignerFunction {
    std::vector<double> x;
    std::vector<double> p;
    Eigen::MatrixXd W; // rows: x, cols: p
    double dx = 0.0;
    double dp = 0.0;

    double normalization() const; // sum W dx dp
    double max_imag_residue = 0.0;
};

// --- states -------------------------------------------------------------

// Analytic harmonic-oscillator eigenstate (Hermite recurrence), discretely
// normalized on the grid.
WaveFunction ho_eigenstate(const Grid1D& grid, int level, double m, double omega, double hbar);

Eigen::VectorXd harmonic_potential(const Grid1D& grid, double m, double omega);

// Lowest `count` eigenpairs of the discretized H; columns of `states` are
// discretely orthonormal eigenvectors.
struct EigenBasis {
    Eigen::VectorXd energies;
    Eigen::MatrixXd states;
};
EigenBasis discrete_eigenbasis(const Grid1D& grid, const Eigen::VectorXd& V, double m, double hbar,
                               int count);

// --- density matrices ----------------------------------------------------

// rho_ij = psi_i conj(psi_j); throws UnnormalizedInput when |norm^2 - 1| > tol.
DensityMatrix density_from_wavefunction(const WaveFunction& psi, double norm_tol = 1e-6);

// --- doubled evolution ----------------------------------------------------

class DoubledEvolver {
  public:
    DoubledEvolver(const Grid1D& grid, const Eigen::VectorXd& V, double m, double hbar, double dt);

    // psi <- U psi (one Crank-Nicolson step of a single sheet).
    void step(Eigen::VectorXcd& psi) const;
    // rho <- U rho U^dagger (both sheets).
    void step(DensityMatrix& rho) const;

    double dt() const { return dt_; }

  private:
    void apply_columns(Eigen::MatrixXcd& m) const;

    int n_ = 0;
    double dt_ = 0.0;
    // Tridiagonal (1 - i lambda H) multiply and prefactored (1 + i lambda H) solve.
    Eigen::VectorXcd rhs_diag_, rhs_off_;
    Eigen::VectorXcd lhs_cprime_; // Thomas forward-elimination factors
    Eigen::VectorXcd lhs_inv_den_;
};

// Full-matrix evolution sampled every `sample_stride` steps (snapshot at
// t = 0 included). Suitable for modest grids; pure states are cheaper via
// DoubledEvolver::step(Eigen::VectorXcd&).
std::vector<DensityMatrix> evolve_doubled(const DensityMatrix& rho0, const Eigen::VectorXd& V,
                                          const model::OscillatorParams& p, double dt, double t_end,
                                          int sample_stride = 1);

// Time series of a single rho entry under pure-state factor evolution.
std::vector<std::complex<double>> evolve_entry_series(const WaveFunction& psi0,
                                                      const Eigen::VectorXd& V,
                                                      const model::OscillatorParams& p, double dt,
                                                      int n_samples, int i, int j,
                                                      int record_every = 1);

// --- spectral analysis -----------------------------------------------------

struct SpectralPeak {
    double omega = 0.0;     // angular frequency
    double amplitude = 0.0; // |DFT|/N, one-sided
};

// Peak extraction from the one-sided power spectrum of a uniformly sampled
// series; needs >= 256 samples. Peaks below rel_threshold * (max peak) are
// dropped; returns peaks sorted by descending amplitude.
std::vector<SpectralPeak> bohr_frequencies(const std::vector<std::complex<double>>& series,
                                           double dt, double rel_threshold = 0.1);

// --- Wigner transform -------------------------------------------------------

// W(x, p) = (1/2 pi hbar) Int rho(x + y/2, x - y/2) e^{-i p y/hbar} dy,
// evaluated on the anti-diagonal lattice y_k = 2 k dx with the conjugate
// momentum grid p_j = j * pi hbar/(n dx). The x-marginal reproduces the
// diagonal of rho exactly on this pairing.
WignerFunction wigner_transform(const DensityMatrix& rho, double hbar);

std::vector<double> x_marginal(const WignerFunction& w);
std::vector<double> p_marginal(const WignerFunction& w);

// --- radial sector -----------------------------------------------------------

struct RadialGrid {
    double r_max = 0.0;
    int n = 0;
};

// Lowest n_levels eigenvalues of the l=0 radial reduction of
// p_r^2/2m + K r^2/2 (K from DerivedParams), conservative flux-form finite
// differences on [0, r_max] with Dirichlet at r_max. A grid-halving
// convergence check guards the result; throws GridTooCoarse on failure.
std::vector<double> radial_spectrum(const model::DerivedParams& d, double m, double hbar,
                                    const RadialGrid& grid, int n_levels,
                                    double convergence_tol = 1e-4);

} // namespace dqlab::quantum
