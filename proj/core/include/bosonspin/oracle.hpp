// oracle.hpp: brute-force propagator of H(t) = -(Delta/2) sx + g X0 cos(Omega t + phi) sz.
//
// Time-ordered product of midpoint exponentials exp(-i H(t_mid) dt), each
// evaluated exactly as a 2x2 rotation. In units of Omega the generator is
// -delta~ sx + xi cos(tau + phi) sz.

#pragma once

#include <Eigen/Core>

#include "bosonspin/markers.hpp"
#include "bosonspin/params.hpp"

namespace bosonspin::oracle {

struct PropagationConfig {
    int steps_per_period{256};  // >= kMinStepsPerPeriod
    double tolerance{1e-10};    // allowed |U^dagger U - 1|
};

inline constexpr int kMinStepsPerPeriod = 64;

/// Propagator from 0 to tau for the branch d.xi (d.xi_prime is ignored).
RelativeUnitary propagate(double xi, double delta_tilde, double phi, double tau,
                          const PropagationConfig& cfg = {});

/// Same as a matrix, in laboratory units.
Eigen::Matrix2cd propagate_exact(const SpinParams& spin, const TrajectoryParams& traj, double t,
                                 const PropagationConfig& cfg = {});

/// U_exact(xi')^dagger U_exact(xi).
RelativeUnitary exact_relative_unitary(const DimensionlessSet& d, const PropagationConfig& cfg = {});

/// Markers of a thermal spin, a = (e_beta, 0, 0), from the exact relative unitary.
MarkerPoint exact_markers(const DimensionlessSet& d, double e_beta, const PropagationConfig& cfg = {});

/// Laboratory-unit form; the thermal polarization is taken from spin.beta * spin.delta.
MarkerPoint exact_markers(const SpinParams& spin, const TrajectoryParams& traj, double t,
                          const PropagationConfig& cfg = {});

}  // namespace bosonspin::oracle
