#include "bosonspin/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bosonspin/floquet.hpp"

namespace bosonspin::oracle {

namespace {

// (a0 + i a.s)(b0 + i b.s) = a0 b0 - a.b + i (a0 b + b0 a - a x b).s
RelativeUnitary compose(const RelativeUnitary& a, const RelativeUnitary& b) {
    RelativeUnitary r;
    r.u0 = a.u0 * b.u0 - (a.u1 * b.u1 + a.u2 * b.u2 + a.u3 * b.u3);
    r.u1 = a.u0 * b.u1 + b.u0 * a.u1 - (a.u2 * b.u3 - a.u3 * b.u2);
    r.u2 = a.u0 * b.u2 + b.u0 * a.u2 - (a.u3 * b.u1 - a.u1 * b.u3);
    r.u3 = a.u0 * b.u3 + b.u0 * a.u3 - (a.u1 * b.u2 - a.u2 * b.u1);
    return r;
}

RelativeUnitary adjoint(const RelativeUnitary& u) { return {u.u0, -u.u1, -u.u2, -u.u3}; }

void check_config(const PropagationConfig& cfg) {
    if (cfg.steps_per_period < kMinStepsPerPeriod) {
        throw std::invalid_argument("stepsPerPeriod must be >= " + std::to_string(kMinStepsPerPeriod));
    }
    if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
}

}  // namespace

RelativeUnitary propagate(double xi, double delta_tilde, double phi, double tau,
                          const PropagationConfig& cfg) {
    check_config(cfg);
    if (!std::isfinite(xi) || !std::isfinite(delta_tilde) || !std::isfinite(phi) || !std::isfinite(tau)) {
        throw std::invalid_argument("propagation parameters must be finite");
    }
    if (tau < 0.0) throw std::invalid_argument("tau must be >= 0");

    RelativeUnitary u;
    if (tau == 0.0) return u;

    const auto steps = static_cast<std::int64_t>(
        std::ceil(tau / (2.0 * std::numbers::pi) * cfg.steps_per_period));
    const double dt = tau / static_cast<double>(steps);
    for (std::int64_t k = 0; k < steps; ++k) {
        const double mid = (static_cast<double>(k) + 0.5) * dt;
        const double hx = -delta_tilde;
        const double hz = xi * std::cos(mid + phi);
        const double norm = std::hypot(hx, hz);
        RelativeUnitary step;
        if (norm > 0.0) {
            const double angle = norm * dt;
            const double s = -std::sin(angle) / norm;
            step = {std::cos(angle), s * hx, 0.0, s * hz};
        }
        u = compose(step, u);
    }
    if (u.norm_defect() > cfg.tolerance) {
        throw std::runtime_error("propagator lost unitarity beyond tolerance");
    }
    return u;
}

Eigen::Matrix2cd propagate_exact(const SpinParams& spin, const TrajectoryParams& traj, double t,
                                 const PropagationConfig& cfg) {
    const DimensionlessSet d = to_dimensionless(traj, spin, t);
    return floquet::to_matrix(propagate(d.xi, d.delta_tilde, d.phi, d.tau, cfg));
}

RelativeUnitary exact_relative_unitary(const DimensionlessSet& d, const PropagationConfig& cfg) {
    const RelativeUnitary u = propagate(d.xi, d.delta_tilde, d.phi, d.tau, cfg);
    const RelativeUnitary v = propagate(d.xi_prime, d.delta_tilde, d.phi, d.tau, cfg);
    return compose(adjoint(v), u);
}

MarkerPoint exact_markers(const DimensionlessSet& d, double e_beta, const PropagationConfig& cfg) {
    const MarkerPair m = markers_single(BlochVector{e_beta, 0.0, 0.0}, exact_relative_unitary(d, cfg));
    return {d.tau, m.gamma_sq, m.b, Provenance::exact_oracle};
}

MarkerPoint exact_markers(const SpinParams& spin, const TrajectoryParams& traj, double t,
                          const PropagationConfig& cfg) {
    const DimensionlessSet d = to_dimensionless(traj, spin, t);
    return exact_markers(d, thermal_bloch(spin).e_beta, cfg);
}

}  // namespace bosonspin::oracle
