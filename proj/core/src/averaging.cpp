#include "bosonspin/averaging.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <stdexcept>

#include "bosonspin/special.hpp"

namespace bosonspin {

namespace {

constexpr double kMinFresnelX = 0.05;
constexpr double kPanelPhase = 2.0;

void check_args(const AvgArgs& x) {
    if (!std::isfinite(x.a) || !std::isfinite(x.b) || !std::isfinite(x.c)) {
        throw std::invalid_argument("averaging arguments must be finite");
    }
    if (!std::isfinite(x.g_max) || x.g_max <= 0.0) throw std::invalid_argument("gMax must be finite and > 0");
}

double avg_linear(double b, double c, double g) {
    const double half = 0.5 * b * g;
    return std::cos(c + half) * sinc(half);
}

double pow_n(double base, std::int64_t n) {
    if (base <= 0.0) return 0.0;
    return std::exp(static_cast<double>(n) * std::log(base));
}

}  // namespace

double avg_cos_quadrature(const AvgArgs& x) {
    check_args(x);
    const double g = x.g_max;
    const double total = (2.0 * std::abs(x.a) * g + std::abs(x.b)) * g;
    const auto panels = static_cast<std::int64_t>(std::ceil(total / kPanelPhase)) + 1;
    const double width = g / static_cast<double>(panels);
    auto f = [&](double u) { return std::cos((x.a * u + x.b) * u + x.c); };

    double sum = 0.0;
    for (std::int64_t k = 0; k < panels; ++k) {
        const double lo = width * static_cast<double>(k);
        sum += boost::math::quadrature::gauss<double, 16>::integrate(f, lo, lo + width);
    }
    return sum / g;
}

double avg_cos(const AvgArgs& args) {
    check_args(args);
    double a = args.a, b = args.b, c = args.c;
    const double g = args.g_max;
    if (a < 0.0) {
        a = -a;
        b = -b;
        c = -c;
    }
    if (a * g * g <= kLinearThreshold) return avg_linear(b, c, g);

    const double ra = std::sqrt(a);
    const double x = ra * g;
    const double phase = b * b / (4.0 * a);
    if (phase > kPhaseThreshold || x < kMinFresnelX) return avg_cos_quadrature({a, b, c, g});

    const double p = b / (2.0 * ra);
    const double t = phase - c;
    const auto lo = fresnel(p);
    const auto hi = fresnel(x + p);
    return (std::cos(t) * (hi.real() - lo.real()) + std::sin(t) * (hi.imag() - lo.imag())) / x;
}

double f_pair(const AvgArgs& args) {
    check_args(args);
    double a = args.a, c = args.c;
    const double b = std::abs(args.b);
    const double g = args.g_max;
    if (a < 0.0) {
        a = -a;
        c = -c;
    }
    const double ra = std::sqrt(a);
    const double x = ra * g;
    const double phase = a > 0.0 ? b * b / (4.0 * a) : 0.0;
    if (a * g * g <= kLinearThreshold || phase > kPhaseThreshold || x < kMinFresnelX) {
        return avg_cos({a, b, c, g}) + avg_cos({a, -b, c, g});
    }

    const double p = b / (2.0 * ra);
    const double t = phase - c;
    const auto up = fresnel(x + p);
    const auto down = fresnel(x - p);
    return (std::cos(t) * (up.real() + down.real()) + std::sin(t) * (up.imag() + down.imag())) / x;
}

AveragedSingles avg_singles_phi(const DimensionlessSet& d, double e_beta) {
    const AveragedSquares sq = averaged_squares(d);
    const double e2 = e_beta * e_beta;
    AveragedSingles out;
    out.gamma.fast = sq.u0_sq.fast + e2 * sq.u1_sq.fast;
    out.gamma.slow = sq.u0_sq.slow + e2 * sq.u1_sq.slow;
    out.b.fast = 1.0 - e2 + e2 * (sq.u0_sq.fast + sq.u1_sq.fast);
    out.b.slow = e2 * (sq.u0_sq.slow + sq.u1_sq.slow);
    return out;
}

FastParts fast_parts(const DimensionlessSet& d, double e_beta) {
    const double s0 = std::sin(d.phi);
    const double s1 = std::sin(d.tau + d.phi);
    const double w_minus = 2.0 * d.delta_xi_bar() * s0;
    const double w_plus = 2.0 * (d.xi_bar + d.xi_bar_prime) * s0;
    const double w = 2.0 * d.delta_xi_bar() * s1;
    const double h1 = sinc(w_minus + w) + sinc(w_minus - w);
    const double h2 = sinc(w_plus + w) + sinc(w_plus - w);
    const double e2 = e_beta * e_beta;
    return {(2.0 + h1) / 8.0 + e2 * (2.0 + h2) / 8.0, 1.0 - e2 * (4.0 - h1 - h2) / 8.0};
}

AsymptoticMarkers asymptotic_markers(const AveragedSingles& s, const EnsembleSpec& spec) {
    spec.validate();
    AsymptoticMarkers m;
    m.gamma_sq = pow_n(s.gamma.fast, spec.n_u);
    m.b = pow_n(s.b.fast, spec.n_mac);
    m.gamma_full = pow_n(s.gamma.total(), spec.n_u);
    m.b_full = pow_n(s.b.total(), spec.n_mac);
    m.gamma_band = std::abs(m.gamma_full - m.gamma_sq);
    m.b_band = std::abs(m.b_full - m.b);
    return m;
}

FastExtrema fast_extrema(const DimensionlessSet& d, double e_beta) {
    const double s0 = std::sin(d.phi);
    const double k_minus = sinc(2.0 * d.delta_xi_bar() * s0);
    const double k_plus = sinc(2.0 * (d.xi_bar + d.xi_bar_prime) * s0);
    const double e2 = e_beta * e_beta;
    return {0.25 * (1.0 + k_minus + e2 * (1.0 + k_plus)), 1.0 - 0.25 * e2 * (2.0 - k_minus - k_plus)};
}

SmallPhiBounds small_phi_bounds(const DimensionlessSet& d, const EnsembleSpec& spec) {
    spec.validate();
    const double e2 = std::pow(thermal_polarization(spec.beta * spec.delta), 2);
    const double phi2 = d.phi * d.phi;
    const double dxi = d.delta_xi_bar();
    const double sum = d.xi_bar + d.xi_bar_prime;
    const auto n_u = static_cast<double>(spec.n_u);
    const auto n_mac = static_cast<double>(spec.n_mac);

    SmallPhiBounds out;
    out.gamma_bound = std::exp(n_u * std::log(0.5 * (1.0 + e2)) -
                               n_u * phi2 * (dxi * dxi + e2 * sum * sum) / (3.0 * (1.0 + e2)));
    out.b_bound = std::exp(-n_mac * e2 * phi2 *
                           (d.xi_bar * d.xi_bar + d.xi_bar_prime * d.xi_bar_prime) / 3.0);
    return out;
}

}  // namespace bosonspin
