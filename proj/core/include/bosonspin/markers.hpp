// markers.hpp: decoherence factor |Gamma|^2 and generalized overlap B.
//
// For rho_0 = (1 + a.sigma)/2 and a relative unitary u0 + i u.sigma:
//   Gamma = u0 + i a.u,   B = 1 - |a x u|^2,
//   B - |Gamma|^2 = (1 - |a|^2)(1 - u0^2).
// B is the squared fidelity; fidelity() returns its square root.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

#include "bosonspin/params.hpp"

namespace bosonspin {

enum class Provenance { exact_oracle, hfe, closed_form_average, monte_carlo, gaussian_approx };

std::string_view to_string(Provenance p);

struct MarkerPoint {
    double tau{0.0};
    double gamma_sq{1.0};
    double b{1.0};
    Provenance provenance{Provenance::hfe};
};

struct MarkerPair {
    double gamma_sq{1.0};
    double b{1.0};
};

struct LengthScales {
    double lambda_dec{0.0};
    double lambda_dist{0.0};  // +inf when E(beta) = 0
};

enum class Marker { gamma, overlap };

std::complex<double> gamma_single(const BlochVector& a, const RelativeUnitary& u);
double gamma_sq_single(const BlochVector& a, const RelativeUnitary& u);
double overlap_single(const BlochVector& a, const RelativeUnitary& u);
MarkerPair markers_single(const BlochVector& a, const RelativeUnitary& u);

/// Unsquared fidelity sqrt(B).
inline double fidelity(double b) { return b > 0.0 ? std::sqrt(b) : 0.0; }

/// Single thermal spin, a = (e_beta, 0, 0). Closed forms at phi = 0,
///   |Gamma|^2 = [1 - (1 - E^2) sin^2(delta~ (xi^2 - xi'^2) tau)] cos^2(dxi sin tau)
///   B         = 1 - E^2 sin^2(dxi sin tau),
/// and the Bloch route through floquet::relative_unitary otherwise.
MarkerPair thermal_singles(const DimensionlessSet& d, double e_beta);

/// Sum of log(values) with the fixed block/pairwise order used for ensembles;
/// zero entries give -inf.
double log_product(std::span<const double> values);

/// Sum of log single-spin markers over the list. Throws on an empty list.
/// Blocks of fixed size are summed sequentially and the block sums combined
/// pairwise, so the value does not depend on how the list is partitioned.
double ensemble_log_product(std::span<const DimensionlessSet> spins, double e_beta, Marker which);

/// exp(ensemble_log_product(...)).
double ensemble_product(std::span<const DimensionlessSet> spins, double e_beta, Marker which);

struct GaussianMarkers {
    double gamma_sq{1.0};
    double b{1.0};
    double window{0.0};  // tau delta~ |xi_bar^2 - xi_bar'^2|
    bool in_window{true};
};

/// Upper end of the small-amplitude window on tau delta~ |xi_bar^2 - xi_bar'^2|.
inline constexpr double kGaussianWindow = 0.1;

/// Phase factor |sin phi - exp(2i delta~ tau) sin(tau + phi)|^2.
double gaussian_phase_factor(const DimensionlessSet& d);

/// Small-amplitude laws
///   |Gamma|^2 = exp(-n_u m F),   B = exp(-n_mac m E^2 F),
/// with m = <g^2> dX0^2 / Omega^2 and F = gaussian_phase_factor(d).
/// For the uniform ensemble m = (xi_bar - xi_bar')^2 / 3.
GaussianMarkers gaussian_markers(const DimensionlessSet& d, double moment, std::int64_t n_u,
                                 std::int64_t n_mac, double e_beta_sq);

/// lambda_dec = Omega / sqrt(n_u <g^2>), lambda_dist = Omega / sqrt(n_mac <g^2> E^2).
LengthScales length_scales(const EnsembleSpec& spec, double omega);

}  // namespace bosonspin
