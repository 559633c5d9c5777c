#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "bosonspin/averaging.hpp"

namespace bosonspin {

namespace {

enum Angle { kD = 0, kM = 1, kGamma = 2, kKappa = 3, kEta = 4 };

using Terms = std::vector<TrigTerm>;

TrigTerm normalized(TrigTerm t) {
    const auto lead = std::find_if(t.n.begin(), t.n.end(), [](int k) { return k != 0; });
    if (lead == t.n.end()) {
        t.q = ((t.q % 4) + 4) % 4;
        if (t.q == 1 || t.q == 3) t.coef = 0.0;
        if (t.q == 2) t.coef = -t.coef;
        t.q = 0;
        return t;
    }
    if (*lead < 0) {
        for (int& k : t.n) k = -k;
        t.q = -t.q;
    }
    t.q = ((t.q % 4) + 4) % 4;
    if (t.q >= 2) {
        t.coef = -t.coef;
        t.q -= 2;
    }
    return t;
}

Terms merged(const Terms& in) {
    std::map<std::pair<std::array<int, 5>, int>, double> acc;
    for (const TrigTerm& raw : in) {
        const TrigTerm t = normalized(raw);
        if (t.coef != 0.0) acc[{t.n, t.q}] += t.coef;
    }
    Terms out;
    for (const auto& [key, coef] : acc) {
        if (coef != 0.0) out.push_back({key.first, key.second, coef});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const TrigTerm& x, const TrigTerm& y) { return x.fast() && !y.fast(); });
    return out;
}

// cos A cos B = [cos(A + B) + cos(A - B)] / 2
Terms multiply(const Terms& x, const Terms& y) {
    Terms out;
    for (const TrigTerm& p : x) {
        for (const TrigTerm& r : y) {
            TrigTerm sum{}, diff{};
            for (std::size_t i = 0; i < 5; ++i) {
                sum.n[i] = p.n[i] + r.n[i];
                diff.n[i] = p.n[i] - r.n[i];
            }
            sum.q = p.q + r.q;
            diff.q = p.q - r.q;
            sum.coef = diff.coef = 0.5 * p.coef * r.coef;
            out.push_back(sum);
            out.push_back(diff);
        }
    }
    return merged(out);
}

Terms add(Terms x, const Terms& y) {
    x.insert(x.end(), y.begin(), y.end());
    return merged(x);
}

TrigTerm factor(Angle angle, bool is_sin) {
    TrigTerm t;
    t.n[angle] = 1;
    t.q = is_sin ? 1 : 0;
    t.coef = 1.0;
    return t;
}

Terms monomial(double coef, std::initializer_list<std::pair<Angle, bool>> factors) {
    Terms acc{TrigTerm{{}, 0, coef}};
    for (const auto& [angle, is_sin] : factors) acc = multiply(acc, Terms{factor(angle, is_sin)});
    return acc;
}

TermTable build() {
    // u0 = cos g cos D cos k + sin g cos M sin k
    // u1 = -cos e sin D cos k + sin e sin M sin k     (cos S = cos M, sin S = -sin M)
    const Terms u0 = add(monomial(1.0, {{kGamma, false}, {kD, false}, {kKappa, false}}),
                         monomial(1.0, {{kGamma, true}, {kM, false}, {kKappa, true}}));
    const Terms u1 = add(monomial(-1.0, {{kEta, false}, {kD, true}, {kKappa, false}}),
                         monomial(1.0, {{kEta, true}, {kM, true}, {kKappa, true}}));
    return {multiply(u0, u0), multiply(u1, u1)};
}

void format_terms(std::ostringstream& os, const char* name, const Terms& terms) {
    static constexpr const char* kNames[5] = {"D", "M", "gamma", "kappa", "eta"};
    for (const TrigTerm& t : terms) {
        std::string arg;
        for (std::size_t i = 0; i < 5; ++i) {
            if (t.n[i] == 0) continue;
            const int k = t.n[i];
            if (arg.empty()) {
                arg += k < 0 ? "-" : "";
            } else {
                arg += k < 0 ? " - " : " + ";
            }
            if (std::abs(k) != 1) arg += std::to_string(std::abs(k));
            arg += kNames[i];
        }
        if (t.q == 1) arg += arg.empty() ? "-pi/2" : " - pi/2";
        if (arg.empty()) arg = "0";
        char coef[32];
        std::snprintf(coef, sizeof coef, "%+.6f", t.coef);
        os << name << "  " << (t.fast() ? "fast" : "slow") << "  " << coef << "  cos(" << arg << ")\n";
    }
}

}  // namespace

const TermTable& term_table() {
    static const TermTable table = build();
    return table;
}

std::string format_term_table(const TermTable& table) {
    std::ostringstream os;
    format_terms(os, "u0^2", table.u0_sq);
    format_terms(os, "u1^2", table.u1_sq);
    return os.str();
}

AvgArgs term_args(const TrigTerm& t, const DimensionlessSet& d) {
    const double xb2 = d.xi_bar * d.xi_bar;
    const double xp2 = d.xi_bar_prime * d.xi_bar_prime;
    const double s = d.delta_tilde * (xb2 - xp2) * d.tau;
    const double m = d.delta_tilde * (xb2 + xp2) * d.tau;
    const double dd = -2.0 * d.delta_tilde * d.tau;
    const double s0 = std::sin(d.phi);
    const double s1 = std::sin(d.tau + d.phi);
    const double dxi = d.delta_xi_bar();
    const double sum = d.xi_bar + d.xi_bar_prime;

    AvgArgs a;
    a.a = t.n[kD] * s + t.n[kM] * m;
    a.b = t.n[kGamma] * dxi * s0 + t.n[kKappa] * dxi * s1 + t.n[kEta] * sum * s0;
    a.c = t.n[kM] * dd - t.q * 0.5 * std::numbers::pi;
    a.g_max = 1.0;
    return a;
}

AveragedSquares averaged_squares(const DimensionlessSet& d) {
    const TermTable& table = term_table();
    auto accumulate = [&](const Terms& terms) {
        FastSlowSplit split;
        for (const TrigTerm& t : terms) {
            const double v = t.coef * avg_cos(term_args(t, d));
            (t.fast() ? split.fast : split.slow) += v;
        }
        return split;
    };
    return {accumulate(table.u0_sq), accumulate(table.u1_sq)};
}

}  // namespace bosonspin
