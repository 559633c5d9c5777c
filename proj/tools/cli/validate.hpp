#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/scenario.hpp"

namespace bosonspin::cli {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status{CheckStatus::pass};
    double measured{0.0};
    double tolerance{0.0};
    std::string note;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    /// True when no check failed; skipped checks do not count against it.
    bool passed() const;
};

/// Cross-route checks per (xi, phi):
///   hfe-vs-oracle      max |u_exact - u_hfe| over the tau grid (skipped outside the HFE domain)
///   unitarity          max |u0^2 + |u|^2 - 1|
///   complementarity    max |B - |Gamma|^2 - (1 - E^2)(1 - u0^2)|
///   monte-carlo        |closed-form - MC| against max(3 stderr, 1e-3)   (ensemble)
///   fast-extrema       numeric max over tau of Gamma_fast, B_fast vs closed form   (ensemble)
ValidationReport run_validate(const Scenario& s);

void print_report(std::ostream& out, const ValidationReport& r);

}  // namespace bosonspin::cli
