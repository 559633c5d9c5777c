#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "bosonspin/averaging.hpp"
#include "bosonspin/markers.hpp"
#include "bosonspin/special.hpp"
#include "quadrature.hpp"

using namespace bosonspin;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = 0.4621171572600097585;

DimensionlessSet ensemble_point(double xb, double xbp, double dt, double tau, double phi) {
    DimensionlessSet d;
    d.xi_bar = xb;
    d.xi_bar_prime = xbp;
    d.xi = xb;
    d.xi_prime = xbp;
    d.delta_tilde = dt;
    d.tau = tau;
    d.phi = phi;
    return d;
}

double reference_avg_cos(const AvgArgs& x) {
    return quad::average([&](double g) { return std::cos((x.a * g + x.b) * g + x.c); }, 0.0, x.g_max);
}

MarkerPair reference_singles(const DimensionlessSet& d, double e) {
    auto at = [&](double r) {
        DimensionlessSet s = d;
        s.xi = r * d.xi_bar;
        s.xi_prime = r * d.xi_bar_prime;
        return thermal_singles(s, e);
    };
    return {quad::integrate([&](double r) { return at(r).gamma_sq; }, 0.0, 1.0),
            quad::integrate([&](double r) { return at(r).b; }, 0.0, 1.0)};
}

EnsembleSpec spec(std::int64_t n_u, std::int64_t n_mac) {
    EnsembleSpec s;
    s.n_u = n_u;
    s.n_mac = n_mac;
    s.delta = 1.0;
    s.beta = 1.0;
    return s;
}

}  // namespace

TEST(AvgCos, ReferenceValues) {
    EXPECT_NEAR(avg_cos({0.5, 0.0, 0.0, 2.0}), 0.6675968481471683111, 1e-13);
    EXPECT_NEAR(avg_cos({0.0, 0.0, 0.7, 3.0}), std::cos(0.7), 1e-15);
    EXPECT_NEAR(avg_cos({0.0, 2.0, 0.0, 1.0}), std::sin(2.0) / 2.0, 1e-15);
}

TEST(AvgCos, MatchesQuadratureOnRandomSets) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> a(-40.0, 40.0), b(-40.0, 40.0), c(-kPi, kPi), g(0.05, 2.0), scale(-14.0, 0.0);
    for (int i = 0; i < 1000; ++i) {
        AvgArgs x{a(rng), b(rng), c(rng), g(rng)};
        if (i % 5 == 0) x.a *= std::pow(10.0, scale(rng));
        if (i % 7 == 0) x.b *= std::pow(10.0, scale(rng));
        EXPECT_NEAR(avg_cos(x), reference_avg_cos(x), 1e-8) << x.a << " " << x.b << " " << x.c << " " << x.g_max;
    }
}

TEST(AvgCos, BranchesJoinContinuously) {
    const double below = 1.0 - 1e-12, above = 1.0 + 1e-12;
    for (double b : {0.0, 0.3, 5.0}) {
        const double lin = kLinearThreshold;
        EXPECT_NEAR(avg_cos({lin * below, b, 0.4, 1.0}), avg_cos({lin * above, b, 0.4, 1.0}), 1e-8);
        const double x = 0.05 * 0.05;
        EXPECT_NEAR(avg_cos({x * below, b, 0.4, 1.0}), avg_cos({x * above, b, 0.4, 1.0}), 1e-8);
    }
    const double a = 1.0, b_edge = 2.0 * std::sqrt(kPhaseThreshold);
    EXPECT_NEAR(avg_cos({a, b_edge * below, 0.1, 1.0}), avg_cos({a, b_edge * above, 0.1, 1.0}), 1e-8);
    EXPECT_NEAR(avg_cos({a, b_edge * below, 0.1, 1.0}), reference_avg_cos({a, b_edge * below, 0.1, 1.0}), 1e-8);
}

TEST(AvgCos, NegativeQuadraticCoefficient) {
    EXPECT_NEAR(avg_cos({-3.0, 1.0, 0.2, 1.5}), avg_cos({3.0, -1.0, -0.2, 1.5}), 1e-14);
}

TEST(AvgCos, RejectsBadArguments) {
    EXPECT_THROW(avg_cos({1.0, 0.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(avg_cos({std::nan(""), 0.0, 0.0, 1.0}), std::invalid_argument);
}

TEST(FPair, ReferenceValueAndSymmetries) {
    EXPECT_NEAR(f_pair({1.0, 1.0, 0.0, 1.0}), 1.5554701650976089505, 1e-13);
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(-20.0, 20.0), g(0.1, 2.0);
    for (int i = 0; i < 300; ++i) {
        const AvgArgs x{u(rng), u(rng), u(rng), g(rng)};
        const double sum = avg_cos(x) + avg_cos({x.a, -x.b, x.c, x.g_max});
        EXPECT_NEAR(f_pair(x), sum, 1e-10);
        EXPECT_NEAR(f_pair(x), f_pair({x.a, -x.b, x.c, x.g_max}), 1e-14);
        EXPECT_NEAR(f_pair(x), f_pair({-x.a, x.b, -x.c, x.g_max}), 1e-14);
    }
}

TEST(TermTable, MatchesGoldenListing) {
    std::ifstream in(BOSONSPIN_GOLDEN_DIR "/term_table.txt");
    ASSERT_TRUE(in) << "missing golden term table";
    std::stringstream golden;
    golden << in.rdbuf();
    EXPECT_EQ(format_term_table(term_table()), golden.str());
}

TEST(TermTable, FastPartsOfSquares) {
    const auto& t = term_table();
    EXPECT_EQ(std::count_if(t.u0_sq.begin(), t.u0_sq.end(), [](const TrigTerm& x) { return x.fast(); }), 3);
    EXPECT_EQ(std::count_if(t.u1_sq.begin(), t.u1_sq.end(), [](const TrigTerm& x) { return x.fast(); }), 3);
    double constant = 0.0;
    for (const auto& x : t.u0_sq) {
        if (x.n == std::array<int, 5>{} && x.q == 0) constant += x.coef;
    }
    EXPECT_DOUBLE_EQ(constant, 0.25);
}

TEST(AveragedSingles, MatchesQuadrature) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> xb(0.0, 1.0), dt(0.0, 0.5), tau(0.0, 60.0), phi(-kPi, kPi), e(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const auto d = ensemble_point(xb(rng), xb(rng), dt(rng), tau(rng), i % 3 == 0 ? 0.0 : phi(rng));
        const double eb = e(rng);
        const auto s = avg_singles_phi(d, eb);
        const auto ref = reference_singles(d, eb);
        EXPECT_NEAR(s.gamma.total(), ref.gamma_sq, 1e-10);
        EXPECT_NEAR(s.b.total(), ref.b, 1e-10);
    }
}

TEST(AveragedSingles, FastPartAgreesWithSincForm) {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> xb(0.0, 1.0), tau(0.0, 60.0), phi(-kPi, kPi), e(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const auto d = ensemble_point(xb(rng), xb(rng), 1.0 / 6.0, tau(rng), phi(rng));
        const double eb = e(rng);
        const auto s = avg_singles_phi(d, eb);
        const auto f = fast_parts(d, eb);
        EXPECT_NEAR(s.gamma.fast, f.gamma, 1e-13);
        EXPECT_NEAR(s.b.fast, f.b, 1e-13);
    }
}

TEST(AveragedSingles, CosineTrajectoryPlateau) {
    for (int n = 0; n < 5; ++n) {
        const auto f = fast_parts(ensemble_point(0.9, 0.1, 1.0 / 6.0, n * kPi, 0.0), kE);
        EXPECT_NEAR(f.gamma, 0.60677613351703629493, 1e-15);
        EXPECT_NEAR(f.b, 1.0, 1e-15);
    }
    const double tau = 1.1, w = 1.6 * std::sin(tau);
    const auto f = fast_parts(ensemble_point(0.9, 0.1, 1.0 / 6.0, tau, 0.0), kE);
    EXPECT_NEAR(f.b, 1.0 - kE * kE * (1.0 - sinc(w)) / 2.0, 1e-15);
}

TEST(AveragedSingles, InfiniteTemperature) {
    const auto s = avg_singles_phi(ensemble_point(0.7, 0.2, 0.1, 13.0, 0.8), 0.0);
    EXPECT_NEAR(s.b.total(), 1.0, 1e-15);
}

TEST(AveragedSingles, PhaseShiftByPiIsSymmetry) {
    for (double phi : {0.1, 0.7, 1.5}) {
        const auto a = avg_singles_phi(ensemble_point(0.8, 0.3, 1.0 / 6.0, 9.0, phi), kE);
        const auto b = avg_singles_phi(ensemble_point(0.8, 0.3, 1.0 / 6.0, 9.0, phi + kPi), kE);
        EXPECT_NEAR(a.gamma.total(), b.gamma.total(), 1e-12);
        EXPECT_NEAR(a.b.total(), b.b.total(), 1e-12);
    }
}

TEST(AveragedSingles, SlowPartDecaysAsInverseSqrtTau) {
    double envelope_lo = 0.0, envelope_hi = 0.0;
    for (double tau = 1000.0; tau < 1020.0; tau += 0.05) {
        envelope_lo = std::max(envelope_lo, std::abs(avg_singles_phi(ensemble_point(0.9, 0.1, 1.0 / 6.0, tau, 0.0), kE).gamma.slow));
    }
    for (double tau = 16000.0; tau < 16020.0; tau += 0.05) {
        envelope_hi = std::max(envelope_hi, std::abs(avg_singles_phi(ensemble_point(0.9, 0.1, 1.0 / 6.0, tau, 0.0), kE).gamma.slow));
    }
    EXPECT_NEAR(envelope_hi / envelope_lo, 0.25, 0.08);
}

TEST(Asymptotic, PowersOfFastParts) {
    const auto s = avg_singles_phi(ensemble_point(0.9, 0.1, 1.0 / 6.0, 0.0, 0.0), kE);
    const auto m = asymptotic_markers(s, spec(20, 100));
    EXPECT_NEAR(m.gamma_sq, 4.5768829375327574228e-05, 1e-17);
    EXPECT_NEAR(m.b, 1.0, 1e-14);
    EXPECT_NEAR(m.gamma_full, 1.0, 1e-14);
    EXPECT_NEAR(m.gamma_band, 1.0 - m.gamma_sq, 1e-14);
}

TEST(Extrema, MatchNumericalMaximum) {
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> xb(0.0, 1.0), phi(-kPi, kPi), bd(0.01, 5.0);
    for (int i = 0; i < 30; ++i) {
        auto d = ensemble_point(xb(rng), xb(rng), 1.0 / 6.0, 0.0, phi(rng));
        const double e = std::tanh(0.5 * bd(rng));
        const auto ex = fast_extrema(d, e);
        double mg = 0.0, mb = 0.0;
        for (int k = 0; k < 20000; ++k) {
            d.tau = 2.0 * kPi * k / 20000.0;
            const auto f = fast_parts(d, e);
            mg = std::max(mg, f.gamma);
            mb = std::max(mb, f.b);
        }
        EXPECT_NEAR(mg, ex.max_gamma_fast, 1e-6);
        EXPECT_NEAR(mb, ex.max_b_fast, 1e-6);
        EXPECT_LT(ex.max_gamma_fast, 1.0);
        EXPECT_LT(ex.max_b_fast, 1.0);
    }
}

TEST(Extrema, CosineTrajectoryValues) {
    const auto ex = fast_extrema(ensemble_point(0.9, 0.1, 1.0 / 6.0, 0.0, 0.0), kE);
    EXPECT_NEAR(ex.max_gamma_fast, 0.60677613351703629493, 1e-15);
    EXPECT_EQ(ex.max_b_fast, 1.0);
}

TEST(SmallPhi, ReferenceValue) {
    const auto b = small_phi_bounds(ensemble_point(0.9, 0.1, 1.0 / 6.0, 0.0, kPi / 4), spec(20, 100));
    EXPECT_NEAR(b.b_bound, 0.027306955179907942637, 1e-15);
}

TEST(SmallPhi, AgreesWithExtremaAtSmallPhase) {
    const auto sp = spec(20, 100);
    for (double phi : {1e-3, 1e-2, 3e-2}) {
        const auto d = ensemble_point(0.9, 0.1, 1.0 / 6.0, 0.0, phi);
        const auto ex = fast_extrema(d, kE);
        const auto est = small_phi_bounds(d, sp);
        const double exact_g = std::pow(ex.max_gamma_fast, 20);
        const double exact_b = std::pow(ex.max_b_fast, 100);
        EXPECT_NEAR(est.gamma_bound / exact_g, 1.0, 20.0 * std::pow(phi, 4));
        EXPECT_NEAR(est.b_bound / exact_b, 1.0, 20.0 * std::pow(phi, 4));
        EXPECT_LT(est.gamma_bound, 1.0);
        EXPECT_LT(est.b_bound, 1.0);
    }
}

TEST(MonteCarlo, DeterministicForSeed) {
    const auto d = ensemble_point(0.9, 0.1, 1.0 / 6.0, 3.7, 0.4);
    const auto a = monte_carlo_average(d, kE, 5000, 42);
    const auto b = monte_carlo_average(d, kE, 5000, 42);
    const auto c = monte_carlo_average(d, kE, 5000, 43);
    EXPECT_EQ(a.gamma.mean, b.gamma.mean);
    EXPECT_EQ(a.b.mean, b.b.mean);
    EXPECT_NE(a.gamma.mean, c.gamma.mean);
}

TEST(MonteCarlo, TauListMatchesSinglePoints) {
    const auto d = ensemble_point(0.9, 0.1, 1.0 / 6.0, 0.0, 0.4);
    const std::vector<double> taus{0.5, 2.0, 7.0};
    const auto many = monte_carlo_average(d, kE, taus, 4000, 7);
    for (std::size_t i = 0; i < taus.size(); ++i) {
        auto di = d;
        di.tau = taus[i];
        const auto one = monte_carlo_average(di, kE, 4000, 7);
        EXPECT_EQ(many[i].tau, taus[i]);
        EXPECT_DOUBLE_EQ(many[i].gamma.mean, one.gamma.mean);
        EXPECT_DOUBLE_EQ(many[i].b.mean, one.b.mean);
    }
}

TEST(MonteCarlo, NoSpreadGivesUnitMarkers) {
    const auto m = monte_carlo_average(ensemble_point(0.5, 0.5, 1.0 / 6.0, 4.0, 0.3), kE, 2000, 1);
    EXPECT_NEAR(m.gamma.mean, 1.0, 1e-14);
    EXPECT_NEAR(m.b.mean, 1.0, 1e-14);
    EXPECT_NEAR(m.gamma.std_error, 0.0, 1e-14);
}

TEST(MonteCarlo, TooFewSamplesRejected) {
    EXPECT_THROW(monte_carlo_average(ensemble_point(0.5, 0.1, 0.1, 1.0, 0.0), kE, 999, 1), std::invalid_argument);
}

TEST(MonteCarlo, AgreesWithClosedForm) {
    std::vector<double> taus;
    for (int i = 0; i < 10; ++i) taus.push_back(0.7 + 2.3 * i);
    for (double phi : {0.0, kPi / 4, kPi / 2}) {
        const auto d = ensemble_point(0.9, 0.1, 1.0 / 6.0, 0.0, phi);
        const auto mc = monte_carlo_average(d, kE, taus, 100000, 1);
        for (const auto& m : mc) {
            auto di = d;
            di.tau = m.tau;
            const auto s = avg_singles_phi(di, kE);
            EXPECT_NEAR(m.gamma.mean, s.gamma.total(), std::max(4.0 * m.gamma.std_error, 1e-3));
            EXPECT_NEAR(m.b.mean, s.b.total(), std::max(4.0 * m.b.std_error, 1e-3));
        }
    }
}

TEST(DrawEnsemble, ScaledCouplings) {
    const auto d = ensemble_point(0.9, 0.3, 0.2, 1.5, 0.1);
    const auto list = draw_ensemble(d, 500, 9, 0);
    ASSERT_EQ(list.size(), 500u);
    for (const auto& s : list) {
        EXPECT_GE(s.xi, 0.0);
        EXPECT_LE(s.xi, 0.9);
        EXPECT_NEAR(s.xi_prime, s.xi / 3.0, 1e-15);
        EXPECT_EQ(s.tau, d.tau);
        EXPECT_EQ(s.phi, d.phi);
    }
    const auto again = draw_ensemble(d, 500, 9, 0);
    EXPECT_EQ(list.front().xi, again.front().xi);
    EXPECT_NE(list.front().xi, draw_ensemble(d, 500, 9, 1).front().xi);
}
