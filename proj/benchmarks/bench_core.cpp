#include <benchmark/benchmark.h>

#include <numbers>

#include "bosonspin/averaging.hpp"
#include "bosonspin/floquet.hpp"
#include "bosonspin/oracle.hpp"
#include "bosonspin/special.hpp"

using namespace bosonspin;

namespace {

DimensionlessSet ensemble_point(double tau, double phi) {
    DimensionlessSet d;
    d.xi = d.xi_bar = 0.9;
    d.xi_prime = d.xi_bar_prime = 0.1;
    d.delta_tilde = 1.0 / 6.0;
    d.tau = tau;
    d.phi = phi;
    return d;
}

void BM_Fresnel(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(fresnel(x));
}
BENCHMARK(BM_Fresnel)->Arg(5)->Arg(15)->Arg(30)->Arg(300);

void BM_RelativeUnitary(benchmark::State& state) {
    const auto d = ensemble_point(17.0, std::numbers::pi / 4);
    for (auto _ : state) benchmark::DoNotOptimize(floquet::relative_unitary(d));
}
BENCHMARK(BM_RelativeUnitary);

void BM_AvgSinglesPhi(benchmark::State& state) {
    const auto d = ensemble_point(static_cast<double>(state.range(0)), std::numbers::pi / 4);
    for (auto _ : state) benchmark::DoNotOptimize(avg_singles_phi(d, 0.46));
}
BENCHMARK(BM_AvgSinglesPhi)->Arg(10)->Arg(1000)->Arg(100000);

void BM_OraclePeriod(benchmark::State& state) {
    const oracle::PropagationConfig cfg{static_cast<int>(state.range(0)), 1e-10};
    for (auto _ : state) benchmark::DoNotOptimize(oracle::propagate(0.9, 1.0 / 6.0, 0.0, 2.0 * std::numbers::pi, cfg));
}
BENCHMARK(BM_OraclePeriod)->Arg(256)->Arg(4096);

void BM_MonteCarlo(benchmark::State& state) {
    const auto d = ensemble_point(5.0, std::numbers::pi / 4);
    for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_average(d, 0.46, state.range(0), 1));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
