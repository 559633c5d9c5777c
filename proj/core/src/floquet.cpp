#include "bosonspin/floquet.hpp"

#include <cmath>
#include <complex>

namespace bosonspin::floquet {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

}  // namespace

PropagatorPieces propagator_pieces(const DimensionlessSet& d) {
    PropagatorPieces p;
    p.slow_angle = d.delta_tilde * (1.0 - d.xi * d.xi) * d.tau;
    p.kick_angle = d.xi * std::sin(d.tau + d.phi);
    p.kick_angle_initial = d.xi * std::sin(d.phi);
    return p;
}

Matrix2 single_unitary(const DimensionlessSet& d) {
    const PropagatorPieces p = propagator_pieces(d);

    // Each factor is diagonal or real-rotation-like; build them explicitly.
    const double ck = std::cos(p.kick_angle), sk = std::sin(p.kick_angle);
    const double cs = std::cos(p.slow_angle), ss = std::sin(p.slow_angle);
    const double c0 = std::cos(p.kick_angle_initial), s0 = std::sin(p.kick_angle_initial);

    Matrix2 kick;
    kick << cd(ck, -sk), 0.0, 0.0, cd(ck, sk);
    Matrix2 slow;
    slow << cs, kI * ss, kI * ss, cs;
    Matrix2 initial;
    initial << cd(c0, s0), 0.0, 0.0, cd(c0, -s0);

    return kick * slow * initial;
}

RelativeUnitary relative_unitary(const DimensionlessSet& d) {
    const double dxi = d.xi - d.xi_prime;
    const double sum_xi = d.xi + d.xi_prime;
    const double s_phi = std::sin(d.phi);
    const double s_tau = std::sin(d.tau + d.phi);

    // Slow angles: difference and sum of the two Floquet rotations.
    const double slow_diff = d.delta_tilde * (d.xi * d.xi - d.xi_prime * d.xi_prime) * d.tau;
    const double slow_sum = d.delta_tilde * (2.0 - d.xi * d.xi - d.xi_prime * d.xi_prime) * d.tau;

    const double kick_rel = dxi * s_tau;   // relative micromotion
    const double init_diff = dxi * s_phi;  // relative initial kick
    const double init_sum = sum_xi * s_phi;

    const double cD = std::cos(slow_diff), sD = std::sin(slow_diff);
    const double cS = std::cos(slow_sum), sS = std::sin(slow_sum);
    const double ck = std::cos(kick_rel), sk = std::sin(kick_rel);
    const double cg = std::cos(init_diff), sg = std::sin(init_diff);
    const double ce = std::cos(init_sum), se = std::sin(init_sum);

    RelativeUnitary u;
    u.u0 = cg * cD * ck + sg * cS * sk;
    u.u1 = -ce * sD * ck - se * sS * sk;
    u.u2 = -se * sD * ck + ce * sS * sk;
    u.u3 = sg * cD * ck - cg * cS * sk;
    return u;
}

RelativeUnitary bloch_components(const Matrix2& u) {
    // u = [[u0 + i u3, u2 + i u1], [-u2 + i u1, u0 - i u3]]
    RelativeUnitary r;
    r.u0 = 0.5 * (u(0, 0) + u(1, 1)).real();
    r.u3 = 0.5 * (u(0, 0) - u(1, 1)).imag();
    r.u1 = 0.5 * (u(0, 1) + u(1, 0)).imag();
    r.u2 = 0.5 * (u(0, 1) - u(1, 0)).real();
    return r;
}

Matrix2 to_matrix(const RelativeUnitary& r) {
    Matrix2 m;
    m << cd(r.u0, r.u3), cd(r.u2, r.u1), cd(-r.u2, r.u1), cd(r.u0, -r.u3);
    return m;
}

}  // namespace bosonspin::floquet
