#include "cli/presets.hpp"

#include <numbers>

#include <fmt/format.h>

namespace bosonspin::cli {

namespace {

constexpr double kPi = std::numbers::pi;

Scenario single_spin(std::string name, double phi) {
    Scenario s;
    s.name = std::move(name);
    s.mode = Mode::single;
    s.xi = {0.9, 0.6};
    s.xi_prime = 0.1;
    s.phi = {phi};
    s.delta_tilde = 1.0 / 6.0;
    s.beta_delta = 1.0;
    s.tau_start = 0.0;
    s.tau_stop = 25.0;
    s.points = 501;
    s.routes = {Route::hfe};
    return s;
}

Scenario ensemble(std::string name) {
    Scenario s;
    s.name = std::move(name);
    s.mode = Mode::ensemble;
    s.xi = {0.9, 0.6};
    s.xi_prime = 0.1;
    s.phi = {0.0};
    s.omega = 3.0;
    s.delta_tilde = 1.0 / 6.0;
    s.beta_delta = 1.0;
    s.n_u = 20;
    s.n_mac = 100;
    s.tau_start = 0.0;
    s.tau_stop = 25.0;
    s.points = 501;
    s.routes = {Route::closed_form};
    return s;
}

Scenario phased(std::string name) {
    Scenario s = ensemble(std::move(name));
    s.xi = {0.9};
    s.phi = {kPi / 10.0, kPi / 4.0, kPi / 2.0};
    s.omega = 1.0;
    s.tau_stop = 100.0;
    s.points = 1001;
    return s;
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
    return names;
}

Scenario figure_preset(std::string_view name) {
    if (name == "fig1" || name == "fig2") return single_spin(std::string(name), 0.0);
    if (name == "fig3" || name == "fig4") return ensemble(std::string(name));
    if (name == "fig5" || name == "fig6") return single_spin(std::string(name), kPi / 2.0);
    if (name == "fig7" || name == "fig8") return phased(std::string(name));
    throw ScenarioError(fmt::format("unknown figure '{}' (expected fig1..fig8)", name));
}

Scenario default_validation_scenario() {
    Scenario s;
    s.name = "validate";
    s.mode = Mode::ensemble;
    s.xi = {0.05};
    s.xi_prime = 0.01;
    s.phi = {0.0, kPi / 4.0};
    s.delta_tilde = 0.02;
    s.beta_delta = 1.0;
    s.n_u = 20;
    s.n_mac = 100;
    s.tau_start = 0.0;
    s.tau_stop = 10.0 * kPi;
    s.points = 201;
    s.routes = {Route::exact, Route::hfe, Route::closed_form, Route::monte_carlo};
    s.seed = 1;
    s.samples = 20000;
    return s;
}

}  // namespace bosonspin::cli
