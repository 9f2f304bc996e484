#include "dqlab/ncplane.hpp"

#include <cmath>
#include <string>

namespace dqlab::ncplane {

using cd = std::complex<double>;

bool TruncatedOperator::is_hermitian(double tol) const {
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

NCPair build_nc_pair(double L2, int N) {
    if (N < 4) throw DimensionTooSmall("ncplane: truncation needs N >= 4, got " + std::to_string(N));
    if (!(L2 > 0.0)) throw ValidationError("ncplane: L2 must be > 0");

    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(N, N);
    for (int i = 0; i + 1 < N; ++i) a(i, i + 1) = std::sqrt(static_cast<double>(i + 1));
    const Eigen::MatrixXcd adag = a.adjoint();

    const double s = std::sqrt(0.5 * L2);
    NCPair pair;
    pair.L2 = L2;
    pair.X = {N, s * (a + adag)};
    pair.Y = {N, cd(0.0, 1.0) * s * (adag - a)};
    return pair;
}

TruncatedOperator momentum_conjugate(const NCPair& pair, double hbar) {
    if (!(hbar > 0.0)) throw NonPositiveParameter("ncplane: hbar must be > 0");
    return {pair.X.dim, (hbar / pair.L2) * pair.Y.mat};
}

double subblock_commutator_residual(const NCPair& pair) {
    const int n = pair.X.dim;
    const Eigen::MatrixXcd comm = pair.X.mat * pair.Y.mat - pair.Y.mat * pair.X.mat;
    const Eigen::MatrixXcd target = cd(0.0, 1.0) * pair.L2 *
                                    Eigen::MatrixXcd::Identity(n, n);
    return (comm - target).topLeftCorner(n - 1, n - 1).cwiseAbs().maxCoeff();
}

VelocityCommutator velocity_commutator_scale(const model::OscillatorParams& p) {
    model::validate(p);
    if (p.gamma == 0.0)
        throw ZeroDamping("ncplane: gamma = 0 is the commutative limit, no velocity commutator");
    return {p.hbar * p.gamma / (p.m * p.m), p.hbar / p.gamma};
}

double signed_area(const PathPolygon& path) {
    const auto& v = path.vertices;
    const std::size_t n = v.size();
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % n];
        twice_area += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * twice_area;
}

double interference_phase(const PathPolygon& path, double L2) {
    if (!path.closed) throw OpenPath("ncplane: interference phase needs a closed path");
    if (path.vertices.size() < 3)
        throw ValidationError("ncplane: closed path needs >= 3 vertices");
    if (!(L2 > 0.0)) throw ValidationError("ncplane: L2 must be > 0");
    return signed_area(path) / L2;
}

UncertaintyResult uncertainty_product(const Eigen::VectorXcd& state, const NCPair& pair,
                                      double tail_tol) {
    const int n = pair.X.dim;
    if (state.size() != n) throw IncompatibleGrids("ncplane: state dimension mismatch");
    const double norm2 = state.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw UnnormalizedInput("ncplane: state norm^2 = " + std::to_string(norm2));
    const double tail = std::norm(state[n - 1]) + std::norm(state[n - 2]);
    if (tail > tail_tol)
        throw TruncationTailTooLarge("ncplane: weight " + std::to_string(tail) +
                                     " on the top truncated levels");

    const auto variance = [&state](const Eigen::MatrixXcd& op) {
        const cd mean = state.dot(op * state);        // <psi|op|psi>
        const cd mean_sq = state.dot(op * (op * state));
        return std::max(0.0, mean_sq.real() - std::norm(mean));
    };
    UncertaintyResult r;
    r.dX = std::sqrt(variance(pair.X.mat));
    r.dY = std::sqrt(variance(pair.Y.mat));
    r.product = r.dX * r.dY;
    // Robertson bound with the truncation allowance on <[X,Y]>.
    const double bound = 0.5 * pair.L2 * (1.0 - static_cast<double>(n) * tail);
    if (r.product < bound - 1e-12 * pair.L2)
        throw NumericError("ncplane: uncertainty product " + std::to_string(r.product) +
                           " below the commutator bound " + std::to_string(bound));
    return r;
}

} // namespace dqlab::ncplane
