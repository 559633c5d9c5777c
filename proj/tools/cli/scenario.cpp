#include "cli/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace bosonspin::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_atom(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (s == "pi") return std::numbers::pi;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ScenarioError(fmt::format("cannot parse number '{}'", whole));
    }
    return v;
}

std::int64_t parse_int(std::string_view s, const std::string& key) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ScenarioError(fmt::format("{}: expected an integer, got '{}'", key, s));
    }
    return v;
}

std::vector<double> parse_list(std::string_view s, const std::string& key) {
    std::vector<double> out;
    for (auto item : split(s, ',')) {
        if (item.empty()) throw ScenarioError(fmt::format("{}: empty list entry", key));
        try {
            out.push_back(parse_value(item));
        } catch (const ScenarioError& e) {
            throw ScenarioError(fmt::format("{}: {}", key, e.what()));
        }
    }
    return out;
}

double parse_scalar(std::string_view s, const std::string& key) {
    const auto v = parse_list(s, key);
    if (v.size() != 1) throw ScenarioError(fmt::format("{}: expected a single value", key));
    return v.front();
}

const std::map<std::string, std::set<std::string>, std::less<>>& known_keys() {
    static const std::map<std::string, std::set<std::string>, std::less<>> keys{
        {"scenario", {"name", "mode"}},
        {"trajectory", {"xi", "xiPrime", "xiBar", "xiBarPrime", "phi", "omega"}},
        {"spin", {"deltaTilde", "betaDelta"}},
        {"ensemble", {"nU", "nMac", "gMax"}},
        {"grid", {"tauStart", "tauStop", "points"}},
        {"run", {"routes", "seed", "samples", "stepsPerPeriod"}},
    };
    return keys;
}

}  // namespace

std::string_view to_string(Route r) {
    switch (r) {
        case Route::exact: return "exact";
        case Route::hfe: return "hfe";
        case Route::closed_form: return "closed-form";
        case Route::monte_carlo: return "monte-carlo";
        case Route::gaussian: return "gaussian";
    }
    return "unknown";
}

Route parse_route(std::string_view name) {
    for (Route r : {Route::exact, Route::hfe, Route::closed_form, Route::monte_carlo, Route::gaussian}) {
        if (to_string(r) == name) return r;
    }
    throw ScenarioError(fmt::format("routes: unknown route '{}'", name));
}

std::vector<Route> parse_routes(std::string_view list) {
    std::vector<Route> out;
    for (auto item : split(list, ',')) {
        if (item.empty()) continue;
        const Route r = parse_route(item);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    if (out.empty()) throw ScenarioError("routes: at least one route is required");
    return out;
}

double parse_value(std::string_view text) {
    std::string_view s = trim(text);
    double sign = 1.0;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-') sign = -1.0;
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    double den = 1.0;
    if (slash != std::string_view::npos) den = parse_atom(s.substr(slash + 1), text);
    double value = 1.0;
    for (auto factor : split(num, '*')) value *= parse_atom(factor, text);
    if (den == 0.0) throw ScenarioError(fmt::format("division by zero in '{}'", text));
    return sign * value / den;
}

void Scenario::validate() const {
    auto fail = [](const std::string& msg) { throw ScenarioError(msg); };
    const char* xi_key = mode == Mode::ensemble ? "xiBar" : "xi";
    if (xi.empty()) fail(fmt::format("{}: at least one value is required", xi_key));
    for (double v : xi) {
        if (!std::isfinite(v)) fail(fmt::format("{}: values must be finite", xi_key));
        if (mode == Mode::ensemble && v < 0.0) fail("xiBar: values must be >= 0");
    }
    if (!std::isfinite(xi_prime)) fail("xiPrime: must be finite");
    if (mode == Mode::ensemble && xi_prime < 0.0) fail("xiBarPrime: must be >= 0");
    if (phi.empty()) fail("phi: at least one value is required");
    for (double v : phi) {
        if (!std::isfinite(v)) fail("phi: values must be finite");
    }
    if (!std::isfinite(omega) || omega <= 0.0) fail("omega: must be > 0");
    if (!std::isfinite(delta_tilde) || delta_tilde < 0.0) fail("deltaTilde: must be >= 0");
    if (!std::isfinite(beta_delta) || beta_delta < 0.0) fail("betaDelta: must be >= 0");
    if (n_u < 1) fail("nU: must be >= 1");
    if (n_mac < 1) fail("nMac: must be >= 1");
    if (!std::isfinite(g_max) || g_max <= 0.0) fail("gMax: must be > 0");
    if (!std::isfinite(tau_start) || tau_start < 0.0) fail("tauStart: must be >= 0");
    if (!std::isfinite(tau_stop)) fail("tauStop: must be finite");
    if (points < 1) fail("points: must be >= 1");
    if (points > 1 && !(tau_stop > tau_start)) fail("tauStop: must exceed tauStart");
    if (routes.empty()) fail("routes: at least one route is required");
    if (samples < 1000) fail("samples: must be >= 1000");
    if (steps_per_period < 64) fail("stepsPerPeriod: must be >= 64");
    if (mode == Mode::single) {
        for (Route r : routes) {
            if (r == Route::closed_form || r == Route::monte_carlo) {
                fail(fmt::format("routes: '{}' requires mode = ensemble", to_string(r)));
            }
        }
    }
}

std::vector<double> Scenario::tau_grid() const {
    std::vector<double> out(static_cast<std::size_t>(points));
    if (points == 1) {
        out[0] = tau_start;
        return out;
    }
    const double step = (tau_stop - tau_start) / static_cast<double>(points - 1);
    for (std::int64_t i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = tau_start + step * static_cast<double>(i);
    out.back() = tau_stop;
    return out;
}

Scenario parse_scenario(std::string_view text) {
    Scenario s;
    std::string section;
    std::set<std::string> seen;
    bool have_single_xi = false, have_ensemble_xi = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ScenarioError(fmt::format("line {}: malformed section header", line_no));
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!known_keys().contains(section)) {
                throw ScenarioError(fmt::format("line {}: unknown section [{}]", line_no, section));
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ScenarioError(fmt::format("line {}: expected key = value", line_no));
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (section.empty()) throw ScenarioError(fmt::format("line {}: key '{}' outside a section", line_no, key));
        if (!known_keys().find(section)->second.contains(key)) {
            throw ScenarioError(fmt::format("line {}: unknown key '{}' in [{}]", line_no, key, section));
        }
        if (!seen.insert(key).second) throw ScenarioError(fmt::format("line {}: duplicate key '{}'", line_no, key));
        if (value.empty()) throw ScenarioError(fmt::format("{}: missing value", key));

        if (key == "name") {
            s.name = std::string(value);
        } else if (key == "mode") {
            if (value == "single") s.mode = Mode::single;
            else if (value == "ensemble") s.mode = Mode::ensemble;
            else throw ScenarioError(fmt::format("mode: expected single or ensemble, got '{}'", value));
        } else if (key == "xi" || key == "xiBar") {
            s.xi = parse_list(value, key);
            (key == "xi" ? have_single_xi : have_ensemble_xi) = true;
        } else if (key == "xiPrime" || key == "xiBarPrime") {
            s.xi_prime = parse_scalar(value, key);
            (key == "xiPrime" ? have_single_xi : have_ensemble_xi) = true;
        } else if (key == "phi") {
            s.phi = parse_list(value, key);
        } else if (key == "omega") {
            s.omega = parse_scalar(value, key);
        } else if (key == "deltaTilde") {
            s.delta_tilde = parse_scalar(value, key);
        } else if (key == "betaDelta") {
            s.beta_delta = parse_scalar(value, key);
        } else if (key == "nU") {
            s.n_u = parse_int(value, key);
        } else if (key == "nMac") {
            s.n_mac = parse_int(value, key);
        } else if (key == "gMax") {
            s.g_max = parse_scalar(value, key);
        } else if (key == "tauStart") {
            s.tau_start = parse_scalar(value, key);
        } else if (key == "tauStop") {
            s.tau_stop = parse_scalar(value, key);
        } else if (key == "points") {
            s.points = parse_int(value, key);
        } else if (key == "routes") {
            s.routes = parse_routes(value);
        } else if (key == "seed") {
            s.seed = static_cast<std::uint64_t>(parse_int(value, key));
        } else if (key == "samples") {
            s.samples = parse_int(value, key);
        } else if (key == "stepsPerPeriod") {
            s.steps_per_period = static_cast<int>(parse_int(value, key));
        }
    }
    if (have_single_xi && s.mode == Mode::ensemble) throw ScenarioError("xi: use xiBar, xiBarPrime in ensemble mode");
    if (have_ensemble_xi && s.mode == Mode::single) throw ScenarioError("xiBar: use xi, xiPrime in single mode");
    s.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError(fmt::format("cannot open scenario file '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace bosonspin::cli
