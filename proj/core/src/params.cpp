#include "bosonspin/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bosonspin {

namespace {

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

void check_trajectory(const TrajectoryParams& traj, double t) {
    require_finite(traj.x0, "x0");
    require_finite(traj.x0_prime, "x0_prime");
    require_finite(traj.omega, "omega");
    require_finite(traj.phi, "phi");
    require_finite(t, "t");
    if (traj.omega <= 0.0) {
        throw std::invalid_argument("omega must be > 0");
    }
    if (t < 0.0) {
        throw std::invalid_argument("t must be >= 0");
    }
}

}  // namespace

bool DimensionlessSet::hfe_valid() const {
    return std::abs(xi) < 1.0 && std::abs(xi_prime) < 1.0 && delta_tilde < 1.0;
}

double RelativeUnitary::norm_defect() const { return std::abs(norm_sq() - 1.0); }

void EnsembleSpec::validate() const {
    if (n_u < 1) throw std::invalid_argument("nU must be >= 1");
    if (n_mac < 1) throw std::invalid_argument("nMac must be >= 1");
    if (!std::isfinite(g_max) || g_max <= 0.0) throw std::invalid_argument("gMax must be finite and > 0");
    if (!std::isfinite(delta) || delta < 0.0) throw std::invalid_argument("Delta must be finite and >= 0");
    if (!std::isfinite(beta) || beta < 0.0) throw std::invalid_argument("beta must be finite and >= 0");
}

double normalize_phase(double phi) {
    require_finite(phi, "phi");
    return std::remainder(phi, 2.0 * std::numbers::pi);
}

DimensionlessSet to_dimensionless(const TrajectoryParams& traj, const SpinParams& spin, double t) {
    check_trajectory(traj, t);
    require_finite(spin.g, "g");
    require_finite(spin.delta, "Delta");

    DimensionlessSet d;
    d.xi = spin.g * traj.x0 / traj.omega;
    d.xi_prime = spin.g * traj.x0_prime / traj.omega;
    d.delta_tilde = spin.delta / (2.0 * traj.omega);
    d.tau = traj.omega * t;
    d.phi = normalize_phase(traj.phi);
    d.xi_bar = d.xi;
    d.xi_bar_prime = d.xi_prime;
    return d;
}

DimensionlessSet to_dimensionless(const TrajectoryParams& traj, const EnsembleSpec& spec, double t) {
    spec.validate();
    SpinParams at_cutoff{spec.g_max, spec.delta, spec.beta};
    return to_dimensionless(traj, at_cutoff, t);
}

double thermal_polarization(double beta_delta) {
    require_finite(beta_delta, "beta*Delta");
    if (beta_delta < 0.0) throw std::invalid_argument("beta*Delta must be >= 0");
    return std::tanh(0.5 * beta_delta);
}

ThermalState thermal_bloch(const SpinParams& spin) {
    require_finite(spin.beta, "beta");
    require_finite(spin.delta, "Delta");
    if (spin.beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    if (spin.delta < 0.0) throw std::invalid_argument("Delta must be >= 0");
    const double e = thermal_polarization(spin.beta * spin.delta);
    return ThermalState{BlochVector{e, 0.0, 0.0}, e};
}

}  // namespace bosonspin
