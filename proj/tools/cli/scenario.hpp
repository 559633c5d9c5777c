// Scenario files: flat "key = value" lines grouped in [sections], '#' comments,
// comma-separated lists. Angles accept pi expressions such as "pi/10" or "-pi/2".
//
//   [scenario]   name, mode (single | ensemble)
//   [trajectory] xi, xiPrime (single) or xiBar, xiBarPrime (ensemble), phi, omega
//   [spin]       deltaTilde, betaDelta
//   [ensemble]   nU, nMac, gMax
//   [grid]       tauStart, tauStop, points
//   [run]        routes, seed, samples, stepsPerPeriod

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bosonspin::cli {

enum class Route { exact, hfe, closed_form, monte_carlo, gaussian };

std::string_view to_string(Route r);
Route parse_route(std::string_view name);
std::vector<Route> parse_routes(std::string_view list);

enum class Mode { single, ensemble };

struct Scenario {
    std::string name{"scenario"};
    Mode mode{Mode::single};
    std::vector<double> xi{0.9};  // xi, or xi_bar in ensemble mode
    double xi_prime{0.1};
    std::vector<double> phi{0.0};
    double omega{1.0};
    double delta_tilde{1.0 / 6.0};
    double beta_delta{1.0};
    std::int64_t n_u{1};
    std::int64_t n_mac{1};
    double g_max{1.0};
    double tau_start{0.0};
    double tau_stop{25.0};
    std::int64_t points{501};
    std::vector<Route> routes{Route::hfe};
    std::uint64_t seed{1};
    std::int64_t samples{100000};
    int steps_per_period{256};

    /// Throws ScenarioError naming the field.
    void validate() const;
    std::vector<double> tau_grid() const;
};

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Angle or number: "0.3", "pi", "-pi/2", "3*pi/4", "pi/10".
double parse_value(std::string_view text);

Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace bosonspin::cli
