// averaging.hpp: averages over couplings g uniform on [0, g_max].
//
// Every single-spin average reduces to sums of
//   <cos(a g^2 + b g + c)> = (1/(sqrt(a) G)) [cos t (C(X + p) - C(p)) + sin t (S(X + p) - S(p))],
// with X = sqrt(a) G, p = b / (2 sqrt(a)), t = b^2/(4a) - c, and to
//   <cos(b g + c)> = cos(c + b G/2) sinc(b G/2)
// when a vanishes. Ensemble averages use r = g / g_max on [0, 1], so xi = r xi_bar.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bosonspin/params.hpp"

namespace bosonspin {

struct AvgArgs {
    double a{0.0};
    double b{0.0};
    double c{0.0};
    double g_max{1.0};
};

/// Below this |a| g_max^2 the linear formula is used.
inline constexpr double kLinearThreshold = 1e-10;
/// Above this |b^2 / 4a| the Fresnel form is replaced by Gauss-Legendre quadrature.
inline constexpr double kPhaseThreshold = 1e6;

double avg_cos(const AvgArgs& args);

/// F[a, b, c] = <cos(a g^2 + b g + c)> + <cos(a g^2 - b g + c)>.
double f_pair(const AvgArgs& args);

/// Composite Gauss-Legendre average of cos(a g^2 + b g + c); the fallback
/// used by avg_cos, exposed for checks.
double avg_cos_quadrature(const AvgArgs& args);

struct FastSlowSplit {
    double fast{0.0};
    double slow{0.0};

    double total() const { return fast + slow; }
};

struct AveragedSingles {
    FastSlowSplit gamma;
    FastSlowSplit b;
};

/// One term coef * cos(n . (D, M, gamma, kappa, eta) - q pi/2) of an expanded
/// u0^2 or u1^2, with
///   D = s r^2,  M = m r^2 + d,  gamma = r dxi_bar sin phi,
///   kappa = r dxi_bar sin(tau + phi),  eta = r (xi_bar + xi_bar') sin phi,
///   s = delta~ (xi_bar^2 - xi_bar'^2) tau,  m = delta~ (xi_bar^2 + xi_bar'^2) tau,  d = -2 delta~ tau.
/// A term is fast when n_D = n_M = 0.
struct TrigTerm {
    std::array<int, 5> n{};
    int q{0};
    double coef{0.0};

    bool fast() const { return n[0] == 0 && n[1] == 0; }
};

struct TermTable {
    std::vector<TrigTerm> u0_sq;
    std::vector<TrigTerm> u1_sq;
};

/// Expanded table, built once.
const TermTable& term_table();

/// Human-readable listing, one term per line.
std::string format_term_table(const TermTable& table);

/// Averaging arguments of one term at the given point (g_max = 1).
AvgArgs term_args(const TrigTerm& t, const DimensionlessSet& d);

/// <u0^2> and <u1^2>, each split into fast and slow parts.
struct AveragedSquares {
    FastSlowSplit u0_sq;
    FastSlowSplit u1_sq;
};
AveragedSquares averaged_squares(const DimensionlessSet& d);

/// <|Gamma^1|^2> = <u0^2> + E^2 <u1^2>,  <B^1> = 1 - E^2 + E^2 (<u0^2> + <u1^2>).
/// Uses xi_bar, xi_bar_prime, delta_tilde, tau, phi of d.
AveragedSingles avg_singles_phi(const DimensionlessSet& d, double e_beta);

struct AsymptoticMarkers {
    double gamma_sq{1.0};    // Gamma_fast^n_u
    double b{1.0};           // B_fast^n_mac
    double gamma_full{1.0};  // (Gamma_fast + Gamma_slow)^n_u
    double b_full{1.0};      // (B_fast + B_slow)^n_mac
    double gamma_band{0.0};  // |gamma_full - gamma_sq|
    double b_band{0.0};
};

AsymptoticMarkers asymptotic_markers(const AveragedSingles& singles, const EnsembleSpec& spec);

struct FastExtrema {
    double max_gamma_fast{1.0};
    double max_b_fast{1.0};
};

/// max over tau of Gamma_fast and B_fast:
///   1/4 {1 + sinc(2 dxi_bar sin phi) + E^2 (1 + sinc(2 (xi_bar + xi_bar') sin phi))}
///   1 - E^2/4 {2 - sinc(2 dxi_bar sin phi) - sinc(2 (xi_bar + xi_bar') sin phi)}
FastExtrema fast_extrema(const DimensionlessSet& d, double e_beta);

struct FastParts {
    double gamma{1.0};
    double b{1.0};
};

/// Fast parts of <|Gamma^1|^2> and <B^1> in sinc form, with
/// w- = 2 dxi_bar sin phi, w+ = 2 (xi_bar + xi_bar') sin phi, w = 2 dxi_bar sin(tau + phi):
///   Gamma_fast = [2 + sinc(w- + w) + sinc(w- - w)]/8 + E^2 [2 + sinc(w+ + w) + sinc(w+ - w)]/8
FastParts fast_parts(const DimensionlessSet& d, double e_beta);

struct SmallPhiBounds {
    double gamma_bound{1.0};
    double b_bound{1.0};
};

/// Leading small-phi estimates of the asymptotic maxima:
///   |Gamma|^2 ~ [(1+E^2)/2]^n_u exp[-n_u phi^2 (dxi_bar^2 + E^2 (xi_bar + xi_bar')^2) / (3 (1+E^2))]
///   B         ~ exp[-n_mac E^2 phi^2 (xi_bar^2 + xi_bar'^2) / 3]
SmallPhiBounds small_phi_bounds(const DimensionlessSet& d, const EnsembleSpec& spec);

struct McEstimate {
    double mean{0.0};
    double std_error{0.0};
};

struct McMarkers {
    double tau{0.0};
    McEstimate gamma;
    McEstimate b;
};

/// Monte Carlo average of the single-spin HFE markers over g uniform on
/// [0, g_max]. Draws are split into a fixed number of partitions, each with
/// std::mt19937_64 seeded by seed_seq{seed, partition}, so the result depends
/// only on (samples, seed).
McMarkers monte_carlo_average(const DimensionlessSet& d, double e_beta, std::int64_t samples,
                              std::uint64_t seed);

/// Same draws evaluated at every tau in taus.
std::vector<McMarkers> monte_carlo_average(const DimensionlessSet& d, double e_beta,
                                           const std::vector<double>& taus, std::int64_t samples,
                                           std::uint64_t seed);

/// count spins with xi = r xi_bar, xi' = r xi_bar', r uniform on [0, 1],
/// drawn from std::mt19937_64 seeded by seed_seq{seed_lo, seed_hi, stream}.
std::vector<DimensionlessSet> draw_ensemble(const DimensionlessSet& d, std::int64_t count,
                                            std::uint64_t seed, std::uint32_t stream);

}  // namespace bosonspin
