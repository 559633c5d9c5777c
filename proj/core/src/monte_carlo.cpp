#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "bosonspin/averaging.hpp"
#include "bosonspin/floquet.hpp"
#include "bosonspin/markers.hpp"

namespace bosonspin {

namespace {

constexpr std::int64_t kMinSamples = 1000;
constexpr std::uint32_t kPartitions = 64;

struct Moments {
    double n{0.0};
    double mean{0.0};
    double m2{0.0};

    void push(double x) {
        n += 1.0;
        const double delta = x - mean;
        mean += delta / n;
        m2 += delta * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.n == 0.0) return;
        const double total = n + o.n;
        const double delta = o.mean - mean;
        mean += delta * o.n / total;
        m2 += o.m2 + delta * delta * n * o.n / total;
        n = total;
    }

    McEstimate estimate() const {
        return {mean, n > 1.0 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0};
    }
};

struct TauMoments {
    Moments gamma;
    Moments b;
};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::int64_t partition_size(std::int64_t samples, std::uint32_t p) {
    return samples / kPartitions + (static_cast<std::int64_t>(p) < samples % kPartitions ? 1 : 0);
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    return std::mt19937_64(seq);
}

void run_partition(const DimensionlessSet& d, double e_beta, const std::vector<double>& taus,
                   std::int64_t count, std::uint64_t seed, std::uint32_t p,
                   std::vector<TauMoments>& out) {
    std::mt19937_64 rng = make_rng(seed, p);
    const BlochVector a{e_beta, 0.0, 0.0};
    DimensionlessSet one = d;
    for (std::int64_t i = 0; i < count; ++i) {
        const double r = uniform01(rng);
        one.xi = r * d.xi_bar;
        one.xi_prime = r * d.xi_bar_prime;
        for (std::size_t k = 0; k < taus.size(); ++k) {
            one.tau = taus[k];
            const MarkerPair m = markers_single(a, floquet::relative_unitary(one));
            out[k].gamma.push(m.gamma_sq);
            out[k].b.push(m.b);
        }
    }
}

}  // namespace

std::vector<McMarkers> monte_carlo_average(const DimensionlessSet& d, double e_beta,
                                           const std::vector<double>& taus, std::int64_t samples,
                                           std::uint64_t seed) {
    if (samples < kMinSamples) throw std::invalid_argument("samples must be >= 1000");

    std::vector<std::vector<TauMoments>> parts(kPartitions, std::vector<TauMoments>(taus.size()));
    const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, kPartitions);
    auto work = [&](unsigned w) {
        for (std::uint32_t p = w; p < kPartitions; p += workers) {
            run_partition(d, e_beta, taus, partition_size(samples, p), seed, p, parts[p]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    std::vector<McMarkers> out(taus.size());
    for (std::size_t k = 0; k < taus.size(); ++k) {
        TauMoments total;
        for (std::uint32_t p = 0; p < kPartitions; ++p) {
            total.gamma.merge(parts[p][k].gamma);
            total.b.merge(parts[p][k].b);
        }
        out[k] = {taus[k], total.gamma.estimate(), total.b.estimate()};
    }
    return out;
}

McMarkers monte_carlo_average(const DimensionlessSet& d, double e_beta, std::int64_t samples,
                              std::uint64_t seed) {
    return monte_carlo_average(d, e_beta, std::vector<double>{d.tau}, samples, seed).front();
}

std::vector<DimensionlessSet> draw_ensemble(const DimensionlessSet& d, std::int64_t count,
                                            std::uint64_t seed, std::uint32_t stream) {
    if (count < 1) throw std::invalid_argument("ensemble size must be >= 1");
    std::mt19937_64 rng = make_rng(seed, stream);
    std::vector<DimensionlessSet> out(static_cast<std::size_t>(count), d);
    for (DimensionlessSet& one : out) {
        const double r = uniform01(rng);
        one.xi = r * d.xi_bar;
        one.xi_prime = r * d.xi_bar_prime;
    }
    return out;
}

}  // namespace bosonspin
