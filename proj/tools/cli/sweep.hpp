// Sweeps over (xi, phi, route, tau) and their CSV form.
//
// Columns (empty cell = not produced by that route):
//   xi, xi_prime      xi and xi' (single) or xi_bar and xi_bar' (ensemble)
//   phi, route, tau
//   gamma_sq, b       markers of the whole fraction (N_u and N_mac spins)
//   gamma_fast, gamma_slow, b_fast, b_slow   single-spin averages (closed-form)
//   gamma_asym, b_asym                        fast-part powers (closed-form)
//   gamma_bound, b_bound                      small-phi estimates (closed-form)
//   gamma_stderr, b_stderr                    single-spin standard errors (monte-carlo)

#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "cli/scenario.hpp"

namespace bosonspin::cli {

inline constexpr double kNa = std::numeric_limits<double>::quiet_NaN();

struct SweepRow {
    double xi{0.0};
    double xi_prime{0.0};
    double phi{0.0};
    Route route{Route::hfe};
    double tau{0.0};
    double gamma_sq{kNa};
    double b{kNa};
    double gamma_fast{kNa};
    double gamma_slow{kNa};
    double b_fast{kNa};
    double b_slow{kNa};
    double gamma_asym{kNa};
    double b_asym{kNa};
    double gamma_bound{kNa};
    double b_bound{kNa};
    double gamma_stderr{kNa};
    double b_stderr{kNa};
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::int64_t outside_gaussian_window{0};  // gaussian rows past the small-amplitude window
};

SweepResult run_sweep(const Scenario& s);

std::string csv_header();
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string to_csv(const std::vector<SweepRow>& rows);

}  // namespace bosonspin::cli
