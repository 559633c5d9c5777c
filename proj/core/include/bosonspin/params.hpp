// params.hpp: physical and dimensionless parameter types of the recoil-less
// boson-spin model, plus the conversions between them.
//
// Units: hbar = 1. Every marker formula depends only on DimensionlessSet, so
// the laboratory types are needed only at the boundary (trajectory amplitudes,
// couplings, temperatures as users specify them).

#pragma once

#include <cstdint>

namespace bosonspin {

/// Classical drive X(t) = X0 cos(Omega t + phi) of the central oscillator,
/// together with the amplitude X0' of the second branch being compared.
struct TrajectoryParams {
    double x0{0.0};
    double x0_prime{0.0};
    double omega{1.0};  // must be > 0
    double phi{0.0};    // radians
};

/// One environmental spin: H_E = -(Delta/2) sigma_x, H_int = g X sigma_z.
struct SpinParams {
    double g{0.0};
    double delta{0.0};  // tunneling energy, >= 0
    double beta{0.0};   // inverse temperature, >= 0
};

/// Working variables of the Floquet treatment.
///   xi = g X0 / Omega, xi' = g X0' / Omega, delta~ = Delta / (2 Omega), tau = Omega t.
/// xi_bar, xi_bar_prime are the same ratios evaluated at the coupling cutoff g_max
/// and are only meaningful for ensemble averages.
struct DimensionlessSet {
    double xi{0.0};
    double xi_prime{0.0};
    double delta_tilde{0.0};
    double tau{0.0};
    double phi{0.0};
    double xi_bar{0.0};
    double xi_bar_prime{0.0};

    double delta_xi() const { return xi - xi_prime; }
    double delta_xi_bar() const { return xi_bar - xi_bar_prime; }

    /// Advisory: the lowest-order high-frequency expansion is only trustworthy
    /// for |xi|, |xi'| < 1 and delta~ < 1. Callers decide what to do with it.
    bool hfe_valid() const;
};

/// Bloch vector a of rho_0 = (1 + a.sigma) / 2; |a| <= 1.
struct BlochVector {
    double a1{0.0};
    double a2{0.0};
    double a3{0.0};

    double norm_sq() const { return a1 * a1 + a2 * a2 + a3 * a3; }
};

/// Pauli decomposition U = u0 + i (u1 sx + u2 sy + u3 sz) of a 2x2 unitary with
/// unit determinant. Normalisation u0^2 + |u|^2 = 1.
struct RelativeUnitary {
    double u0{1.0};
    double u1{0.0};
    double u2{0.0};
    double u3{0.0};

    double norm_sq() const { return u0 * u0 + u1 * u1 + u2 * u2 + u3 * u3; }
    /// |u0^2 + |u|^2 - 1|
    double norm_defect() const;
};

/// Fractions of a spin bath with couplings drawn uniformly from [0, g_max]
/// and a common tunneling energy.
struct EnsembleSpec {
    std::int64_t n_u{1};    // unobserved fraction, traced out
    std::int64_t n_mac{1};  // macrofraction held by one observer
    double g_max{1.0};
    double delta{0.0};
    double beta{0.0};

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    /// <g^2> for the uniform distribution on [0, g_max].
    double mean_g_sq() const { return g_max * g_max / 3.0; }
};

struct ThermalState {
    BlochVector a;
    double e_beta{0.0};  // E(beta) = tanh(beta Delta / 2)
};

/// Reduce an angle into [-pi, pi].
double normalize_phase(double phi);

/// Single-spin conversion. xi_bar and xi_bar_prime are set equal to xi, xi'
/// (a degenerate ensemble whose cutoff is the coupling itself).
DimensionlessSet to_dimensionless(const TrajectoryParams& traj, const SpinParams& spin, double t);

/// Ensemble conversion: xi and xi' are evaluated at g = g_max, so they coincide
/// with the cutoffs xi_bar, xi_bar'.
DimensionlessSet to_dimensionless(const TrajectoryParams& traj, const EnsembleSpec& spec, double t);

/// Thermal initial state of one spin: a = (E(beta), 0, 0).
ThermalState thermal_bloch(const SpinParams& spin);

/// E(beta) from the product beta * Delta.
double thermal_polarization(double beta_delta);

}  // namespace bosonspin
