#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "bosonspin/floquet.hpp"

using namespace bosonspin;
using floquet::Matrix2;

namespace {

constexpr double kPi = std::numbers::pi;

DimensionlessSet point(double xi, double xip, double dt, double tau, double phi) {
    DimensionlessSet d;
    d.xi = xi;
    d.xi_prime = xip;
    d.delta_tilde = dt;
    d.tau = tau;
    d.phi = phi;
    return d;
}

double max_component_diff(const RelativeUnitary& a, const RelativeUnitary& b) {
    return std::max({std::abs(a.u0 - b.u0), std::abs(a.u1 - b.u1), std::abs(a.u2 - b.u2), std::abs(a.u3 - b.u3)});
}

RelativeUnitary from_product(const DimensionlessSet& d) {
    DimensionlessSet other = d;
    other.xi = d.xi_prime;
    return floquet::bloch_components(floquet::single_unitary(other).adjoint() * floquet::single_unitary(d));
}

}  // namespace

TEST(PropagatorPieces, DecoupledSpinIsPureTunneling) {
    const auto p = floquet::propagator_pieces(point(0.0, 0.0, 1.0 / 6.0, 3.0, 0.0));
    EXPECT_NEAR(p.slow_angle, 0.5, 1e-15);
    EXPECT_EQ(p.kick_angle, 0.0);
    EXPECT_EQ(p.kick_angle_initial, 0.0);
}

TEST(PropagatorPieces, SlowAngleShrinksWithXi) {
    const auto p = floquet::propagator_pieces(point(0.9, 0.0, 1.0 / 6.0, kPi, 0.0));
    EXPECT_NEAR(p.slow_angle, 0.099483767363676785885, 1e-15);
    EXPECT_NEAR(p.kick_angle, 0.0, 1e-15);
}

TEST(PropagatorPieces, InitialKickOnlyForShiftedPhase) {
    EXPECT_NEAR(floquet::propagator_pieces(point(0.5, 0.0, 0.3, 0.0, kPi / 2)).kick_angle_initial, 0.5, 1e-15);
    EXPECT_EQ(floquet::propagator_pieces(point(0.5, 0.0, 0.3, 4.0, 0.0)).kick_angle_initial, 0.0);
}

TEST(SingleUnitary, IdentityAtStart) {
    const Matrix2 u = floquet::single_unitary(point(0.7, 0.0, 0.2, 0.0, 0.0));
    EXPECT_LT((u - Matrix2::Identity()).norm(), 1e-15);
}

TEST(SingleUnitary, DecoupledIsSigmaXRotation) {
    const double dt = 0.3, tau = 2.2;
    const Matrix2 u = floquet::single_unitary(point(0.0, 0.0, dt, tau, 0.0));
    const std::complex<double> i{0.0, 1.0};
    Matrix2 expected;
    expected << std::cos(dt * tau), i * std::sin(dt * tau), i * std::sin(dt * tau), std::cos(dt * tau);
    EXPECT_LT((u - expected).norm(), 1e-15);
}

TEST(SingleUnitary, EqualsTwoFactorProduct) {
    const double xi = 0.9, dt = 1.0 / 6.0, tau = 1.0;
    const std::complex<double> i{0.0, 1.0};
    const double k = xi * std::sin(tau), s = dt * (1.0 - xi * xi) * tau;
    Matrix2 kick, slow;
    kick << std::exp(-i * k), 0.0, 0.0, std::exp(i * k);
    slow << std::cos(s), i * std::sin(s), i * std::sin(s), std::cos(s);
    const Matrix2 u = floquet::single_unitary(point(xi, 0.0, dt, tau, 0.0));
    EXPECT_LT((u - kick * slow).norm(), 1e-15);
}

TEST(RelativeUnitary, TrivialCases) {
    const auto id = floquet::relative_unitary(point(0.9, 0.1, 1.0 / 6.0, 0.0, 0.0));
    EXPECT_NEAR(id.u0, 1.0, 1e-15);
    EXPECT_NEAR(std::abs(id.u1) + std::abs(id.u2) + std::abs(id.u3), 0.0, 1e-15);
    const auto same = floquet::relative_unitary(point(0.4, 0.4, 1.0 / 6.0, 5.3, 0.0));
    EXPECT_NEAR(same.u0, 1.0, 1e-15);
    EXPECT_NEAR(std::abs(same.u1) + std::abs(same.u2) + std::abs(same.u3), 0.0, 1e-15);
}

TEST(RelativeUnitary, CosineTrajectoryValues) {
    const auto u = floquet::relative_unitary(point(0.9, 0.1, 1.0 / 6.0, kPi / 2, 0.0));
    EXPECT_NEAR(u.u0, 0.68148199616307473458, 1e-14);
    EXPECT_NEAR(u.u1, -0.14485346994444637616, 1e-14);
    EXPECT_NEAR(u.u2, 0.21809996808972615114, 1e-14);
    EXPECT_NEAR(u.u3, -0.68339751614262163464, 1e-14);
}

TEST(RelativeUnitary, UnitaryAndEqualToOperatorProduct) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xi(-1.0, 1.0), dt(0.0, 1.0), tau(0.0, 60.0), phi(-kPi, kPi);
    double worst_norm = 0.0, worst_diff = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const auto d = point(xi(rng), xi(rng), dt(rng), tau(rng), i % 4 == 0 ? 0.0 : phi(rng));
        const auto u = floquet::relative_unitary(d);
        worst_norm = std::max(worst_norm, u.norm_defect());
        worst_diff = std::max(worst_diff, max_component_diff(u, from_product(d)));
    }
    EXPECT_LT(worst_norm, 1e-12);
    EXPECT_LT(worst_diff, 1e-12);
}

TEST(RelativeUnitary, ZeroPhaseHasNoInitialKickTerms) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> xi(-1.0, 1.0), tau(0.0, 40.0);
    for (int i = 0; i < 200; ++i) {
        const double a = xi(rng), b = xi(rng), dt = 0.2, t = tau(rng);
        const auto u = floquet::relative_unitary(point(a, b, dt, t, 0.0));
        const double D = dt * (a * a - b * b) * t, S = dt * (2.0 - a * a - b * b) * t, k = (a - b) * std::sin(t);
        EXPECT_NEAR(u.u0, std::cos(D) * std::cos(k), 1e-12);
        EXPECT_NEAR(u.u1, -std::sin(D) * std::cos(k), 1e-12);
        EXPECT_NEAR(u.u2, std::sin(S) * std::sin(k), 1e-12);
        EXPECT_NEAR(u.u3, -std::cos(S) * std::sin(k), 1e-12);
    }
}

TEST(RelativeUnitary, ExchangeGivesInverse) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> xi(-1.0, 1.0), tau(0.0, 30.0), phi(-kPi, kPi);
    for (int i = 0; i < 200; ++i) {
        const double a = xi(rng), b = xi(rng), t = tau(rng), p = phi(rng);
        const auto u = floquet::relative_unitary(point(a, b, 0.25, t, p));
        const auto v = floquet::relative_unitary(point(b, a, 0.25, t, p));
        EXPECT_NEAR(u.u0, v.u0, 1e-12);
        EXPECT_NEAR(u.u1, -v.u1, 1e-12);
        EXPECT_NEAR(u.u2, -v.u2, 1e-12);
        EXPECT_NEAR(u.u3, -v.u3, 1e-12);
    }
}

TEST(RelativeUnitary, TurningPointsKillTransverseComponents) {
    for (int n = 0; n <= 12; ++n) {
        const auto u = floquet::relative_unitary(point(0.9, 0.1, 1.0 / 6.0, n * kPi, 0.0));
        EXPECT_NEAR(u.u2, 0.0, 1e-12) << n;
        EXPECT_NEAR(u.u3, 0.0, 1e-12) << n;
    }
}

TEST(BlochComponents, RoundTrip) {
    const RelativeUnitary u{0.5, -0.5, 0.5, 0.5};
    EXPECT_LT(max_component_diff(u, floquet::bloch_components(floquet::to_matrix(u))), 1e-16);
}
