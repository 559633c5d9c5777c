#include "cli/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "bosonspin/averaging.hpp"
#include "bosonspin/markers.hpp"
#include "bosonspin/oracle.hpp"

namespace bosonspin::cli {

namespace {

constexpr std::uint32_t kGammaStream = 1u << 20;
constexpr std::uint32_t kOverlapStream = (1u << 20) + 1;

struct Context {
    const Scenario& s;
    DimensionlessSet base;
    double e_beta;
    EnsembleSpec spec;
    std::vector<double> taus;
    oracle::PropagationConfig cfg;
};

SweepRow blank(const Context& c, Route r, double tau) {
    SweepRow row;
    row.xi = c.base.xi_bar;
    row.xi_prime = c.base.xi_bar_prime;
    row.phi = c.base.phi;
    row.route = r;
    row.tau = tau;
    return row;
}

DimensionlessSet at(const Context& c, double tau) {
    DimensionlessSet d = c.base;
    d.tau = tau;
    return d;
}

void single_route(const Context& c, Route r, SweepResult& out) {
    for (double tau : c.taus) {
        const DimensionlessSet d = at(c, tau);
        SweepRow row = blank(c, r, tau);
        if (r == Route::exact) {
            const MarkerPoint m = oracle::exact_markers(d, c.e_beta, c.cfg);
            row.gamma_sq = m.gamma_sq;
            row.b = m.b;
        } else if (r == Route::hfe) {
            const MarkerPair m = thermal_singles(d, c.e_beta);
            row.gamma_sq = m.gamma_sq;
            row.b = m.b;
        } else if (r == Route::gaussian) {
            const double dxi = d.delta_xi();
            const GaussianMarkers g = gaussian_markers(d, dxi * dxi, 1, 1, c.e_beta * c.e_beta);
            row.gamma_sq = g.gamma_sq;
            row.b = g.b;
            if (!g.in_window) ++out.outside_gaussian_window;
        }
        out.rows.push_back(row);
    }
}

double realization_log(const std::vector<DimensionlessSet>& spins, double tau, const Context& c,
                       Marker which, bool exact) {
    std::vector<double> values(spins.size());
    for (std::size_t i = 0; i < spins.size(); ++i) {
        DimensionlessSet d = spins[i];
        d.tau = tau;
        if (exact) {
            const MarkerPoint m = oracle::exact_markers(d, c.e_beta, c.cfg);
            values[i] = which == Marker::gamma ? m.gamma_sq : m.b;
        } else {
            const MarkerPair m = thermal_singles(d, c.e_beta);
            values[i] = which == Marker::gamma ? m.gamma_sq : m.b;
        }
    }
    return log_product(values);
}

void ensemble_route(const Context& c, Route r, SweepResult& out) {
    const auto n_u = static_cast<double>(c.spec.n_u);
    const auto n_mac = static_cast<double>(c.spec.n_mac);
    auto power = [](double base, double n) { return base > 0.0 ? std::exp(n * std::log(base)) : 0.0; };

    if (r == Route::monte_carlo) {
        const auto mc = monte_carlo_average(c.base, c.e_beta, c.taus, c.s.samples, c.s.seed);
        for (const McMarkers& m : mc) {
            SweepRow row = blank(c, r, m.tau);
            row.gamma_sq = power(m.gamma.mean, n_u);
            row.b = power(m.b.mean, n_mac);
            row.gamma_stderr = m.gamma.std_error;
            row.b_stderr = m.b.std_error;
            out.rows.push_back(row);
        }
        return;
    }

    std::vector<DimensionlessSet> u_spins, mac_spins;
    if (r == Route::exact || r == Route::hfe) {
        u_spins = draw_ensemble(c.base, c.spec.n_u, c.s.seed, kGammaStream);
        mac_spins = draw_ensemble(c.base, c.spec.n_mac, c.s.seed, kOverlapStream);
    }

    for (double tau : c.taus) {
        const DimensionlessSet d = at(c, tau);
        SweepRow row = blank(c, r, tau);
        if (r == Route::closed_form) {
            const AveragedSingles avg = avg_singles_phi(d, c.e_beta);
            const AsymptoticMarkers asym = asymptotic_markers(avg, c.spec);
            const SmallPhiBounds bounds = small_phi_bounds(d, c.spec);
            row.gamma_sq = asym.gamma_full;
            row.b = asym.b_full;
            row.gamma_fast = avg.gamma.fast;
            row.gamma_slow = avg.gamma.slow;
            row.b_fast = avg.b.fast;
            row.b_slow = avg.b.slow;
            row.gamma_asym = asym.gamma_sq;
            row.b_asym = asym.b;
            row.gamma_bound = bounds.gamma_bound;
            row.b_bound = bounds.b_bound;
        } else if (r == Route::exact || r == Route::hfe) {
            const bool exact = r == Route::exact;
            row.gamma_sq = std::exp(realization_log(u_spins, tau, c, Marker::gamma, exact));
            row.b = std::exp(realization_log(mac_spins, tau, c, Marker::overlap, exact));
        } else if (r == Route::gaussian) {
            const double dxi = d.delta_xi_bar();
            const GaussianMarkers g =
                gaussian_markers(d, dxi * dxi / 3.0, c.spec.n_u, c.spec.n_mac, c.e_beta * c.e_beta);
            row.gamma_sq = g.gamma_sq;
            row.b = g.b;
            if (!g.in_window) ++out.outside_gaussian_window;
        }
        out.rows.push_back(row);
    }
}

void cell(std::string& line, double v) {
    line += ',';
    if (!std::isnan(v)) line += fmt::format("{:.17g}", v);
}

}  // namespace

SweepResult run_sweep(const Scenario& s) {
    s.validate();
    SweepResult out;
    std::vector<Route> routes = s.routes;
    std::sort(routes.begin(), routes.end());

    for (double xi : s.xi) {
        for (double phi : s.phi) {
            DimensionlessSet base;
            base.xi = base.xi_bar = xi;
            base.xi_prime = base.xi_bar_prime = s.xi_prime;
            base.delta_tilde = s.delta_tilde;
            base.phi = normalize_phase(phi);

            EnsembleSpec spec;
            spec.n_u = s.mode == Mode::ensemble ? s.n_u : 1;
            spec.n_mac = s.mode == Mode::ensemble ? s.n_mac : 1;
            spec.g_max = s.g_max;
            spec.delta = 1.0;
            spec.beta = s.beta_delta;

            const Context c{s, base, thermal_polarization(s.beta_delta), spec, s.tau_grid(),
                            oracle::PropagationConfig{s.steps_per_period, 1e-10}};
            for (Route r : routes) {
                if (s.mode == Mode::single) {
                    single_route(c, r, out);
                } else {
                    ensemble_route(c, r, out);
                }
            }
        }
    }
    return out;
}

std::string csv_header() {
    return "xi,xi_prime,phi,route,tau,gamma_sq,b,gamma_fast,gamma_slow,b_fast,b_slow,"
           "gamma_asym,b_asym,gamma_bound,b_bound,gamma_stderr,b_stderr";
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << csv_header() << '\n';
    std::string line;
    for (const SweepRow& r : rows) {
        line = fmt::format("{:.17g},{:.17g},{:.17g},{},{:.17g}", r.xi, r.xi_prime, r.phi, to_string(r.route), r.tau);
        for (double v : {r.gamma_sq, r.b, r.gamma_fast, r.gamma_slow, r.b_fast, r.b_slow, r.gamma_asym,
                         r.b_asym, r.gamma_bound, r.b_bound, r.gamma_stderr, r.b_stderr}) {
            cell(line, v);
        }
        out << line << '\n';
    }
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

}  // namespace bosonspin::cli
