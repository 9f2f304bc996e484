// Noncommutative (x+, x-) plane on truncated ladder-operator matrices.
//
// X = sqrt(L2/2)(a + a^dag), Y = i sqrt(L2/2)(a^dag - a) give
// [X, Y] = i L2 on the leading (N-1)x(N-1) block; the truncation defect is
// a single entry of magnitude N*L2 at the last diagonal position and is
// tracked, not hidden. The dissipative interference phase of a closed path
// is its signed shoelace area over L2; with L2 = hbar/gamma this is the
// phase theta = A gamma / hbar.
#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dqlab/errors.hpp"
#include "dqlab/model.hpp"

namespace dqlab::ncplane {

struct TruncatedOperator {
    int dim = 0;
    Eigen::MatrixXcd mat;

    bool is_hermitian(double tol = 1e-12) const;
};

struct NCPair {
    TruncatedOperator X;
    TruncatedOperator Y;
    double L2 = 0.0;
};

// Throws DimensionTooSmall for N < 4, ValidationError for L2 <= 0.
NCPair build_nc_pair(double L2, int N);

// P_X = hbar Y / L2, satisfying [X, P_X] = i hbar on the subblock.
TruncatedOperator momentum_conjugate(const NCPair& pair, double hbar);

// Max |([X,Y] - i L2)_{ij}| over the leading (N-1)x(N-1) block.
double subblock_commutator_residual(const NCPair& pair);

struct VelocityCommutator {
    double scale = 0.0; // hbar gamma / m^2 = [v+, v-]/i
    double L2 = 0.0;    // hbar / gamma, cross-check: m^2 scale L2 / hbar^2 = 1
};

// Throws ZeroDamping at gamma = 0 (commutative limit).
VelocityCommutator velocity_commutator_scale(const model::OscillatorParams& p);

struct PathPolygon {
    std::vector<std::array<double, 2>> vertices;
    bool closed = false;
};

// Signed shoelace area (positive for counterclockwise orientation).
double signed_area(const PathPolygon& path);

// theta = signed area / L2; throws OpenPath for paths not marked closed.
double interference_phase(const PathPolygon& path, double L2);

struct UncertaintyResult {
    double dX = 0.0;
    double dY = 0.0;
    double product = 0.0;
};

// Standard deviations of X and Y on a normalized state; the top two levels
// must carry < tail_tol weight (throws TruncationTailTooLarge otherwise) so
// the truncation defect cannot contaminate the moments.
UncertaintyResult uncertainty_product(const Eigen::VectorXcd& state, const NCPair& pair,
                                      double tail_tol = 1e-8);

} // namespace dqlab::ncplane
