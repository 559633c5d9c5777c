#include "bosonspin/markers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bosonspin/floquet.hpp"

namespace bosonspin {

namespace {

constexpr std::size_t kBlock = 256;

double safe_log(double v) { return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity(); }

double pairwise_sum(std::vector<double>& v) {
    if (v.empty()) return 0.0;
    std::size_t n = v.size();
    while (n > 1) {
        const std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) v[i] = v[2 * i] + v[2 * i + 1];
        if (n % 2) {
            v[half] = v[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return v[0];
}

}  // namespace

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::exact_oracle: return "exact";
        case Provenance::hfe: return "hfe";
        case Provenance::closed_form_average: return "closed-form";
        case Provenance::monte_carlo: return "monte-carlo";
        case Provenance::gaussian_approx: return "gaussian";
    }
    return "unknown";
}

std::complex<double> gamma_single(const BlochVector& a, const RelativeUnitary& u) {
    return {u.u0, a.a1 * u.u1 + a.a2 * u.u2 + a.a3 * u.u3};
}

double gamma_sq_single(const BlochVector& a, const RelativeUnitary& u) {
    const double dot = a.a1 * u.u1 + a.a2 * u.u2 + a.a3 * u.u3;
    return u.u0 * u.u0 + dot * dot;
}

double overlap_single(const BlochVector& a, const RelativeUnitary& u) {
    const double c1 = a.a2 * u.u3 - a.a3 * u.u2;
    const double c2 = a.a3 * u.u1 - a.a1 * u.u3;
    const double c3 = a.a1 * u.u2 - a.a2 * u.u1;
    return 1.0 - (c1 * c1 + c2 * c2 + c3 * c3);
}

MarkerPair markers_single(const BlochVector& a, const RelativeUnitary& u) {
    return {gamma_sq_single(a, u), overlap_single(a, u)};
}

MarkerPair thermal_singles(const DimensionlessSet& d, double e_beta) {
    if (d.phi != 0.0) {
        return markers_single(BlochVector{e_beta, 0.0, 0.0}, floquet::relative_unitary(d));
    }
    const double e2 = e_beta * e_beta;
    const double slow = std::sin(d.delta_tilde * (d.xi * d.xi - d.xi_prime * d.xi_prime) * d.tau);
    const double kick = std::sin(d.delta_xi() * std::sin(d.tau));
    const double ck2 = 1.0 - kick * kick;
    return {(1.0 - (1.0 - e2) * slow * slow) * ck2, 1.0 - e2 * kick * kick};
}

double log_product(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("ensemble product over an empty fraction");
    std::vector<double> blocks;
    blocks.reserve(values.size() / kBlock + 1);
    for (std::size_t start = 0; start < values.size(); start += kBlock) {
        const std::size_t stop = std::min(values.size(), start + kBlock);
        double acc = 0.0;
        for (std::size_t i = start; i < stop; ++i) acc += safe_log(values[i]);
        blocks.push_back(acc);
    }
    return pairwise_sum(blocks);
}

double ensemble_log_product(std::span<const DimensionlessSet> spins, double e_beta, Marker which) {
    if (spins.empty()) throw std::invalid_argument("ensemble product over an empty fraction");
    std::vector<double> values(spins.size());
    for (std::size_t i = 0; i < spins.size(); ++i) {
        const MarkerPair p = thermal_singles(spins[i], e_beta);
        values[i] = which == Marker::gamma ? p.gamma_sq : p.b;
    }
    return log_product(values);
}

double ensemble_product(std::span<const DimensionlessSet> spins, double e_beta, Marker which) {
    return std::exp(ensemble_log_product(spins, e_beta, which));
}

double gaussian_phase_factor(const DimensionlessSet& d) {
    const double s0 = std::sin(d.phi);
    const double s1 = std::sin(d.tau + d.phi);
    return s0 * s0 + s1 * s1 - 2.0 * s0 * s1 * std::cos(2.0 * d.delta_tilde * d.tau);
}

GaussianMarkers gaussian_markers(const DimensionlessSet& d, double moment, std::int64_t n_u,
                                 std::int64_t n_mac, double e_beta_sq) {
    if (n_u < 1) throw std::invalid_argument("nU must be >= 1");
    if (n_mac < 1) throw std::invalid_argument("nMac must be >= 1");
    if (!std::isfinite(moment) || moment < 0.0) throw std::invalid_argument("moment must be finite and >= 0");

    const double f = gaussian_phase_factor(d);
    GaussianMarkers g;
    g.gamma_sq = std::exp(-static_cast<double>(n_u) * moment * f);
    g.b = std::exp(-static_cast<double>(n_mac) * moment * e_beta_sq * f);
    g.window = d.tau * d.delta_tilde *
               std::abs(d.xi_bar * d.xi_bar - d.xi_bar_prime * d.xi_bar_prime);
    g.in_window = g.window <= kGaussianWindow;
    return g;
}

LengthScales length_scales(const EnsembleSpec& spec, double omega) {
    spec.validate();
    if (!std::isfinite(omega) || omega <= 0.0) throw std::invalid_argument("omega must be finite and > 0");
    const double g2 = spec.mean_g_sq();
    const double e = thermal_polarization(spec.beta * spec.delta);
    LengthScales l;
    l.lambda_dec = omega / std::sqrt(static_cast<double>(spec.n_u) * g2);
    l.lambda_dist = e > 0.0 ? omega / std::sqrt(static_cast<double>(spec.n_mac) * g2 * e * e)
                            : std::numeric_limits<double>::infinity();
    return l;
}

}  // namespace bosonspin
