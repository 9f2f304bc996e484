#include "dqlab/doubling.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace dqlab::doubling {

TruncatedMode TruncatedMode::fock(int dim) {
    if (dim < 2) throw DimensionTooSmall("doubling: Fock truncation needs dim >= 2");
    TruncatedMode mode;
    mode.dim = dim;
    mode.a = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i + 1 < dim; ++i) mode.a(i, i + 1) = std::sqrt(static_cast<double>(i + 1));
    mode.a_dag = mode.a.transpose();
    return mode;
}

CoproductResult coproduct(const TruncatedMode& mode, double q) {
    if (!(q > 0.0))
        throw NonPositiveDeformation("doubling: deformation parameter must be > 0, got " +
                                     std::to_string(q));
    const int d = mode.dim;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
    const double sq = std::sqrt(q);
    CoproductResult r;
    r.q = q;
    r.mode_dim = d;
    r.matrix = Eigen::MatrixXd::Zero(d * d, d * d);
    // kron(A, B): index (i1*d + i2, j1*d + j2) = A(i1,j1) B(i2,j2)
    const auto add_kron = [&](double c, const Eigen::MatrixXd& lhs, const Eigen::MatrixXd& rhs) {
        for (int i1 = 0; i1 < d; ++i1)
            for (int j1 = 0; j1 < d; ++j1) {
                if (lhs(i1, j1) == 0.0) continue;
                r.matrix.block(i1 * d, j1 * d, d, d) += c * lhs(i1, j1) * rhs;
            }
    };
    add_kron(sq, mode.a_dag, id);
    add_kron(1.0 / sq, id, mode.a_dag);
    return r;
}

double theta_vacuum_overlap(double theta, int n_modes) {
    if (n_modes < 1) throw ValidationError("doubling: n_modes must be >= 1");
    return std::pow(std::cos(theta), n_modes);
}

namespace {

// Fermionic ladder action on a Jordan-Wigner basis state: bit j of the
// index is the occupation of mode j; the string sign is the parity of the
// occupied modes below j.
inline double jw_sign(std::uint32_t state, int j) {
    const std::uint32_t below = state & ((1u << j) - 1u);
    return (std::popcount(below) & 1) ? -1.0 : 1.0;
}

} // namespace

double theta_vacuum_overlap_explicit(double theta, int n_modes) {
    if (n_modes < 1 || n_modes > 8)
        throw ValidationError("doubling: explicit construction supports 1 <= n_modes <= 8");
    const int n_ferm = 2 * n_modes; // mode pair q -> fermions 2q (a) and 2q+1 (tilde a)
    const std::size_t dim = std::size_t{1} << n_ferm;

    // G = theta * sum_q (a_q^dag ta_q^dag - ta_q a_q), antihermitian and real.
    const auto apply_generator = [&](const std::vector<double>& v, std::vector<double>& out) {
        std::fill(out.begin(), out.end(), 0.0);
        for (std::uint32_t s = 0; s < dim; ++s) {
            const double amp = v[s];
            if (amp == 0.0) continue;
            for (int qm = 0; qm < n_modes; ++qm) {
                const int ja = 2 * qm, jt = 2 * qm + 1;
                const std::uint32_t ba = 1u << ja, bt = 1u << jt;
                // a^dag ta^dag: create tilde mode first, then the plain mode.
                if (!(s & ba) && !(s & bt)) {
                    double sign = jw_sign(s, jt);
                    const std::uint32_t s1 = s | bt;
                    sign *= jw_sign(s1, ja);
                    out[s1 | ba] += theta * sign * amp;
                }
                // -(ta a): annihilate plain mode first, then the tilde mode.
                if ((s & ba) && (s & bt)) {
                    double sign = jw_sign(s, ja);
                    const std::uint32_t s1 = s & ~ba;
                    sign *= jw_sign(s1, jt);
                    out[s1 & ~bt] -= theta * sign * amp;
                }
            }
        }
    };

    // |0(theta)> = e^G |0>, via substepped Taylor so no term grows large.
    const double norm_bound = 2.0 * std::abs(theta) * n_modes;
    int n_sub = 1;
    while (norm_bound / n_sub > 0.5) n_sub *= 2;
    const double scale = 1.0 / static_cast<double>(n_sub);

    std::vector<double> state(dim, 0.0), term(dim, 0.0), g_term(dim, 0.0);
    state[0] = 1.0;
    for (int sub = 0; sub < n_sub; ++sub) {
        term = state;
        for (int k = 1; k <= 60; ++k) {
            apply_generator(term, g_term);
            double term_norm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                term[i] = g_term[i] * scale / static_cast<double>(k);
                state[i] += term[i];
                term_norm += term[i] * term[i];
            }
            if (term_norm < 1e-34) break;
        }
    }
    return state[0];
}

} // namespace dqlab::doubling
