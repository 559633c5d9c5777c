#include "cli/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <boost/math/tools/minima.hpp>
#include <fmt/format.h>

#include "bosonspin/averaging.hpp"
#include "bosonspin/floquet.hpp"
#include "bosonspin/markers.hpp"
#include "bosonspin/oracle.hpp"

namespace bosonspin::cli {

namespace {

constexpr double kHfeTolerance = 5e-2;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kMcFloor = 1e-3;
constexpr double kExtremaTolerance = 1e-6;
constexpr int kMcPoints = 11;
constexpr int kExtremaGrid = 4000;

double component_error(const RelativeUnitary& a, const RelativeUnitary& b) {
    return std::max({std::abs(a.u0 - b.u0), std::abs(a.u1 - b.u1), std::abs(a.u2 - b.u2), std::abs(a.u3 - b.u3)});
}

CheckResult bounded(std::string name, double measured, double tolerance) {
    CheckResult c{std::move(name), CheckStatus::pass, measured, tolerance, {}};
    if (!(measured <= tolerance)) c.status = CheckStatus::fail;
    return c;
}

// Largest value of f on [0, 2 pi]: grid search, then Brent refinement around the best node.
template <class F>
double maximize_tau(F f) {
    const double step = 2.0 * std::numbers::pi / kExtremaGrid;
    int best = 0;
    double best_v = f(0.0);
    for (int i = 1; i <= kExtremaGrid; ++i) {
        const double v = f(step * i);
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    const auto [x, neg] = boost::math::tools::brent_find_minima([&](double t) { return -f(t); },
                                                                step * (best - 1), step * (best + 1), 52);
    return std::max(best_v, -neg);
}

std::string label(const Scenario& s, double xi, double phi) {
    return fmt::format("{}={:.6g} phi={:.6g}", s.mode == Mode::ensemble ? "xiBar" : "xi", xi, phi);
}

}  // namespace

bool ValidationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

ValidationReport run_validate(const Scenario& s) {
    s.validate();
    ValidationReport report;
    const double e = thermal_polarization(s.beta_delta);
    const BlochVector a{e, 0.0, 0.0};
    const std::vector<double> taus = s.tau_grid();
    const oracle::PropagationConfig cfg{s.steps_per_period, 1e-10};

    for (double xi : s.xi) {
        for (double phi_raw : s.phi) {
            const double phi = normalize_phase(phi_raw);
            const std::string tag = label(s, xi, phi);
            DimensionlessSet base;
            base.xi = base.xi_bar = xi;
            base.xi_prime = base.xi_bar_prime = s.xi_prime;
            base.delta_tilde = s.delta_tilde;
            base.phi = phi;

            double hfe_err = 0.0, unit_err = 0.0, comp_err = 0.0;
            for (double tau : taus) {
                DimensionlessSet d = base;
                d.tau = tau;
                const RelativeUnitary u = floquet::relative_unitary(d);
                unit_err = std::max(unit_err, u.norm_defect());
                const MarkerPair m = markers_single(a, u);
                comp_err = std::max(comp_err, std::abs(m.b - m.gamma_sq - (1.0 - e * e) * (1.0 - u.u0 * u.u0)));
                if (base.hfe_valid()) hfe_err = std::max(hfe_err, component_error(oracle::exact_relative_unitary(d, cfg), u));
            }

            if (base.hfe_valid()) {
                report.checks.push_back(bounded("hfe-vs-oracle " + tag, hfe_err, kHfeTolerance));
            } else {
                report.checks.push_back({"hfe-vs-oracle " + tag, CheckStatus::skip, 0.0, kHfeTolerance,
                                         "outside HFE validity domain (needs |xi| < 1, |xi'| < 1, deltaTilde < 1)"});
            }
            report.checks.push_back(bounded("unitarity " + tag, unit_err, kIdentityTolerance));
            report.checks.push_back(bounded("complementarity " + tag, comp_err, kIdentityTolerance));

            if (s.mode != Mode::ensemble) continue;

            std::vector<double> mc_taus;
            for (int i = 0; i < kMcPoints; ++i) {
                mc_taus.push_back(s.tau_start + (s.tau_stop - s.tau_start) * i / (kMcPoints - 1));
            }
            const auto mc = monte_carlo_average(base, e, mc_taus, s.samples, s.seed);
            double worst_ratio = 0.0, worst_diff = 0.0, worst_allowed = kMcFloor;
            for (const McMarkers& m : mc) {
                DimensionlessSet d = base;
                d.tau = m.tau;
                const AveragedSingles cf = avg_singles_phi(d, e);
                const std::pair<double, McEstimate> pairs[] = {{cf.gamma.total(), m.gamma}, {cf.b.total(), m.b}};
                for (const auto& [value, est] : pairs) {
                    const double diff = std::abs(value - est.mean);
                    const double allowed = std::max(3.0 * est.std_error, kMcFloor);
                    if (diff / allowed > worst_ratio) {
                        worst_ratio = diff / allowed;
                        worst_diff = diff;
                        worst_allowed = allowed;
                    }
                }
            }
            report.checks.push_back(bounded("monte-carlo " + tag, worst_diff, worst_allowed));

            const FastExtrema ext = fast_extrema(base, e);
            auto fast_at = [&](double tau, bool gamma) {
                DimensionlessSet d = base;
                d.tau = tau;
                const FastParts f = fast_parts(d, e);
                return gamma ? f.gamma : f.b;
            };
            const double g_max = maximize_tau([&](double t) { return fast_at(t, true); });
            const double b_max = maximize_tau([&](double t) { return fast_at(t, false); });
            const double ext_err = std::max(std::abs(g_max - ext.max_gamma_fast), std::abs(b_max - ext.max_b_fast));
            report.checks.push_back(bounded("fast-extrema " + tag, ext_err, kExtremaTolerance));
        }
    }
    return report;
}

void print_report(std::ostream& out, const ValidationReport& r) {
    for (const CheckResult& c : r.checks) {
        const char* status = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
        out << fmt::format("{} {:<40} measured={:.3e} tol={:.1e}", status, c.name, c.measured, c.tolerance);
        if (!c.note.empty()) out << "  (" << c.note << ")";
        out << '\n';
    }
    out << (r.passed() ? "validation passed\n" : "validation FAILED\n");
}

}  // namespace bosonspin::cli
