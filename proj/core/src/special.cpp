#include "bosonspin/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bosonspin {

namespace {

using cd = std::complex<double>;

constexpr double kSeriesMax = 2.0;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 1000;

// sum_n i^n x^(2n+1) / (n! (2n+1))
cd fresnel_series(double x) {
    const double x2 = x * x;
    cd term{x, 0.0};  // i^n x^(2n+1) / n!
    cd sum = term;
    for (int n = 1; n < kMaxIter; ++n) {
        term *= cd{0.0, x2 / n};
        const cd add = term / static_cast<double>(2 * n + 1);
        sum += add;
        if (std::abs(add) < kEps * std::abs(sum)) break;
    }
    return sum;
}

// sqrt(pi/8)(1 + i) - x exp(i x^2) / f, with f the continued fraction
//   f = b0 + a1/(b1 + a2/(b2 + ...)),  b_k = 1 - 2i x^2 + 4k,  a_k = -(2k-1)(2k),
// evaluated by the modified Lentz method. Requires x > 0.
cd fresnel_tail(double x) {
    constexpr double tiny = 1e-300;
    const double x2 = x * x;
    cd b{1.0, -2.0 * x2};
    cd f = b;
    cd c = f;
    cd d{0.0, 0.0};
    for (int k = 1; k < kMaxIter; ++k) {
        const double a = -static_cast<double>((2 * k - 1) * (2 * k));
        b += 4.0;
        d = b + a * d;
        if (std::abs(d) < tiny) d = tiny;
        d = 1.0 / d;
        c = b + a / c;
        if (std::abs(c) < tiny) c = tiny;
        const cd delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    const double edge = std::sqrt(std::numbers::pi / 8.0);
    return cd{edge, edge} - x * std::polar(1.0, x2) / f;
}

}  // namespace

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

cd fresnel(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("fresnel argument must be finite");
    const double ax = std::abs(x);
    const cd v = ax <= kSeriesMax ? fresnel_series(ax) : fresnel_tail(ax);
    return x < 0.0 ? -v : v;
}

double fresnel_c(double x) { return fresnel(x).real(); }

double fresnel_s(double x) { return fresnel(x).imag(); }

}  // namespace bosonspin
