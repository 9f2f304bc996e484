// Algebra-doubling machinery on truncated mode spaces.
//
// The coproduct lifts a single-mode creation operator to the doubled
// tensor space, Delta a^dag_q = sqrt(q) (a^dag x 1) + (1/sqrt(q)) (1 x a^dag)
// with the q^{+-1/2} factors read as scalars; q = 1 recovers the plain
// doubling map a^dag x 1 + 1 x a^dag.
//
// theta_vacuum_overlap gives the overlap of the Bogoliubov-rotated doubled
// fermion vacuum with the original vacuum. For N independent mode pairs the
// rotation acts as cos(theta) per pair, so the overlap is cos(theta)^N and
// decays with the mode count: the finite-N shadow of unitarily inequivalent
// representations. theta_vacuum_overlap_explicit rebuilds the same number
// from the full 4^N fermionic tensor space (Jordan-Wigner), independent of
// the closed form.
#pragma once

#include <Eigen/Dense>

#include "dqlab/errors.hpp"

namespace dqlab::doubling {

struct TruncatedMode {
    int dim = 0;
    Eigen::MatrixXd a;     // annihilation, a|n> = sqrt(n)|n-1>
    Eigen::MatrixXd a_dag; // transpose of a

    static TruncatedMode fock(int dim);
};

struct CoproductResult {
    double q = 1.0;
    int mode_dim = 0;
    Eigen::MatrixXd matrix; // acts on the dim^2 tensor space
};

// Throws NonPositiveDeformation for q <= 0.
CoproductResult coproduct(const TruncatedMode& mode, double q);

// cos(theta)^n_modes.
double theta_vacuum_overlap(double theta, int n_modes);

// Direct construction on the 4^n_modes space; n_modes in [1, 8].
double theta_vacuum_overlap_explicit(double theta, int n_modes);

} // namespace dqlab::doubling
