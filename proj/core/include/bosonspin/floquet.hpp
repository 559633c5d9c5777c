// floquet.hpp: lowest-order high-frequency (Floquet) propagator of a spin driven
// by the classical trajectory, H = -(Delta/2) sx + g X0 cos(Omega t + phi) sz.
//
// U(t) = exp(-i K(t)) exp(-i t H_F) exp(i K(0)) with
//   t H_F = -delta~ (1 - xi^2) tau sx,    K(t) = xi sin(tau + phi) sz,
// and t0 = 0 throughout.

#pragma once

#include <Eigen/Core>

#include "bosonspin/params.hpp"

namespace bosonspin::floquet {

using Matrix2 = Eigen::Matrix2cd;

struct PropagatorPieces {
    double slow_angle{0.0};          // delta~ (1 - xi^2) tau
    double kick_angle{0.0};          // xi sin(tau + phi)
    double kick_angle_initial{0.0};  // xi sin(phi); zero for phi = 0
};

/// Angles of the three factors for the branch d.xi.
PropagatorPieces propagator_pieces(const DimensionlessSet& d);

/// U for branch d.xi, assembled as
///   [cos k - i sz sin k] [cos s + i sx sin s] [cos k0 + i sz sin k0].
Matrix2 single_unitary(const DimensionlessSet& d);

/// Closed-form Pauli components of U(xi')^dagger U(xi). For phi = 0 the
/// initial-kick factors are exactly 1 and the result reduces term by term to
/// the cosine-trajectory expressions.
RelativeUnitary relative_unitary(const DimensionlessSet& d);

/// Pauli components (u0, u) of a matrix of the form u0 + i u.sigma.
RelativeUnitary bloch_components(const Matrix2& u);

/// Inverse of bloch_components.
Matrix2 to_matrix(const RelativeUnitary& u);

}  // namespace bosonspin::floquet
