#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "dqlab/model.hpp"

using namespace dqlab;
using model::derive_params;
using model::OscillatorParams;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

} // namespace

TEST_CASE("undamped limit") {
    OscillatorParams p; // m = k = hbar = 1, gamma = 0
    const auto d = derive_params(p);
    CHECK(d.Gamma == 0.0);
    CHECK(d.Omega == 1.0);
    CHECK(d.tau == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(d.K == 1.0);
    CHECK(!d.L2.has_value());
}

TEST_CASE("damped example, hand substitution") {
    OscillatorParams p;
    p.gamma = 0.2;
    const auto d = derive_params(p);
    CHECK(d.Gamma == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(d.Omega == doctest::Approx(std::sqrt(0.99)).epsilon(1e-15));
    CHECK(d.Omega == doctest::Approx(0.99498743710662).epsilon(1e-14));
    CHECK(d.tau == doctest::Approx(6.314838833996553).epsilon(1e-14));
    CHECK(d.K == doctest::Approx(0.99).epsilon(1e-14));
    REQUIRE(d.L2.has_value());
    CHECK(*d.L2 == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("overdamped and invalid parameters are rejected") {
    OscillatorParams p;
    p.gamma = 0.2;
    p.k = 0.009; // below gamma^2/(4m) = 0.01
    CHECK_THROWS_AS(derive_params(p), UnderdampedViolation);
    p.k = 0.01; // critical damping also rejected
    CHECK_THROWS_AS(derive_params(p), UnderdampedViolation);

    OscillatorParams bad;
    bad.m = -1.0;
    CHECK_THROWS_AS(derive_params(bad), NonPositiveParameter);
    bad = OscillatorParams{};
    bad.k = 0.0;
    CHECK_THROWS_AS(derive_params(bad), NonPositiveParameter);
    bad = OscillatorParams{};
    bad.hbar = -0.1;
    CHECK_THROWS_AS(derive_params(bad), NonPositiveParameter);
    bad = OscillatorParams{};
    bad.gamma = -0.5;
    CHECK_THROWS_AS(derive_params(bad), NonPositiveParameter);
}

TEST_CASE("derive_params is pure: repeated calls bit-identical") {
    OscillatorParams p;
    p.m = 1.7;
    p.gamma = 0.31;
    p.k = 2.4;
    p.hbar = 0.9;
    const auto a = derive_params(p);
    const auto b = derive_params(p);
    CHECK(bit_equal(a.Gamma, b.Gamma));
    CHECK(bit_equal(a.Omega, b.Omega));
    CHECK(bit_equal(a.tau, b.tau));
    CHECK(bit_equal(a.K, b.K));
    CHECK(bit_equal(a.B, b.B));
    CHECK(bit_equal(*a.L2, *b.L2));
}

TEST_CASE("Omega strictly decreases with gamma at fixed m, k") {
    OscillatorParams p;
    p.m = 1.3;
    p.k = 2.0;
    double prev = derive_params(p).Omega;
    for (double gamma = 0.1; gamma < 3.0; gamma += 0.1) {
        p.gamma = gamma;
        if (!model::is_underdamped(p)) break;
        const double omega = derive_params(p).Omega;
        CHECK(omega < prev);
        prev = omega;
    }
}

TEST_CASE("Omega -> 0+ as k approaches the underdamped boundary") {
    OscillatorParams p;
    p.gamma = 1.0;
    const double k_crit = p.gamma * p.gamma / (4.0 * p.m);
    double prev = std::numeric_limits<double>::infinity();
    for (double eps = 1e-2; eps >= 1e-10; eps *= 1e-2) {
        p.k = k_crit * (1.0 + eps);
        const double omega = derive_params(p).Omega;
        CHECK(omega > 0.0);
        CHECK(omega < prev);
        prev = omega;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("gamma -> 0 recovers sqrt(k/m)") {
    OscillatorParams p;
    p.m = 2.0;
    p.k = 3.0;
    p.gamma = 1e-8;
    CHECK(derive_params(p).Omega ==
          doctest::Approx(std::sqrt(p.k / p.m)).epsilon(1e-12));
}

TEST_CASE("magnetic field B = gamma c / e") {
    OscillatorParams p;
    p.gamma = 2.0;
    p.k = 4.0; // keep the pair underdamped
    CHECK(derive_params(p).B == doctest::Approx(2.0));
    p.charge_e = 2.0;
    CHECK(derive_params(p).B == doctest::Approx(1.0));
    p.light_c = 3.0;
    CHECK(derive_params(p).B == doctest::Approx(3.0));
}
