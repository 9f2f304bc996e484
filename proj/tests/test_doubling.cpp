#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dqlab/doubling.hpp"

using namespace dqlab;
using namespace dqlab::doubling;

namespace {

// Swap operator on the d x d tensor space: S (u x v) = v x u.
Eigen::MatrixXd swap_operator(int d) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
    return s;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const int d = static_cast<int>(a.rows());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (a(i, j) != 0.0) out.block(i * d, j * d, d, d) = a(i, j) * b;
    return out;
}

} // namespace

TEST_CASE("truncated mode ladder structure") {
    const auto mode = TruncatedMode::fock(8);
    CHECK((mode.a_dag - mode.a.transpose()).cwiseAbs().maxCoeff() == 0.0);
    // [a, a_dag] = identity on the (d-1) subblock.
    const Eigen::MatrixXd comm = mode.a * mode.a_dag - mode.a_dag * mode.a;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(8, 8);
    CHECK((comm - id).topLeftCorner(7, 7).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(TruncatedMode::fock(1), DimensionTooSmall);
}

TEST_CASE("coproduct at q = 1 is the undeformed doubling map") {
    const auto mode = TruncatedMode::fock(5);
    const auto cop = coproduct(mode, 1.0);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(5, 5);
    const Eigen::MatrixXd undeformed = kron(mode.a_dag, id) + kron(id, mode.a_dag);
    CHECK((cop.matrix - undeformed).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("deformed coproduct worked matrix element") {
    const auto mode = TruncatedMode::fock(4);
    const auto cop = coproduct(mode, 4.0);
    // <1,0| Delta a^dag_q |0,0> = sqrt(q) = 2.
    CHECK(cop.matrix(1 * 4 + 0, 0) == doctest::Approx(2.0));
    // <0,1| Delta a^dag_q |0,0> = 1/sqrt(q) = 0.5.
    CHECK(cop.matrix(0 * 4 + 1, 0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(coproduct(mode, 0.0), NonPositiveDeformation);
    CHECK_THROWS_AS(coproduct(mode, -2.0), NonPositiveDeformation);
}

TEST_CASE("coproduct linearity in the mode operator") {
    auto mode = TruncatedMode::fock(4);
    const auto base = coproduct(mode, 2.0);
    auto scaled_mode = mode;
    scaled_mode.a_dag *= 3.0;
    scaled_mode.a *= 3.0;
    const auto scaled = coproduct(scaled_mode, 2.0);
    CHECK((scaled.matrix - 3.0 * base.matrix).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("q <-> 1/q symmetry under tensor-factor swap") {
    const auto mode = TruncatedMode::fock(6);
    const auto s = swap_operator(6);
    for (const double q : {0.3, 0.8, 2.0, 5.5}) {
        const auto cq = coproduct(mode, q);
        const auto cinv = coproduct(mode, 1.0 / q);
        CHECK((s * cq.matrix * s - cinv.matrix).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("theta-vacuum overlap closed form") {
    CHECK(theta_vacuum_overlap(0.0, 1) == 1.0);
    CHECK(theta_vacuum_overlap(0.0, 12) == 1.0);
    CHECK(theta_vacuum_overlap(0.25 * std::numbers::pi, 10) ==
          doctest::Approx(0.03125).epsilon(1e-14));
    CHECK_THROWS_AS(theta_vacuum_overlap(0.1, 0), ValidationError);
}

TEST_CASE("explicit tensor construction matches cos^N theta to 1e-12") {
    for (int n = 1; n <= 6; ++n)
        for (const double theta : {0.0, 0.1, 0.4, 0.25 * std::numbers::pi, 1.0, 1.3, 1.5}) {
            const double closed = theta_vacuum_overlap(theta, n);
            const double direct = theta_vacuum_overlap_explicit(theta, n);
            CHECK(std::abs(closed - direct) <= 1e-12);
        }
    CHECK_THROWS_AS(theta_vacuum_overlap_explicit(0.3, 9), ValidationError);
}

TEST_CASE("overlap decays monotonically in mode count") {
    for (const double theta : {0.2, 0.7, 1.2}) {
        double prev = 1.0;
        for (int n = 1; n <= 200; ++n) {
            const double o = theta_vacuum_overlap(theta, n);
            CHECK(o >= 0.0);
            CHECK(o <= 1.0);
            CHECK(o < prev);
            prev = o;
        }
        CHECK(prev < 0.02); // heading to zero
    }
}
