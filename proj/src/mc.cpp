#include "sbl/mc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sbl {

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix3(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

} // namespace

double counter_uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    // strictly inside (0,1): safe for logs
    return (static_cast<double>(mix3(seed, stream, counter) >> 11) + 0.5) * 0x1.0p-53;
}

double counter_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t idx) {
    const double u1 = counter_uniform01(seed, stream, 2 * idx);
    const double u2 = counter_uniform01(seed, stream, 2 * idx + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

McEstimate mc_mean_sharded(std::uint64_t n_samples, std::uint32_t shards, Exec exec,
                           const std::function<double(std::uint64_t, std::uint64_t)>& h) {
    if (shards == 0 || n_samples == 0) throw std::invalid_argument("mc_mean_sharded needs samples and shards");
    if (shards > n_samples) shards = static_cast<std::uint32_t>(n_samples);

    const std::uint64_t base = n_samples / shards, extra = n_samples % shards;
    std::vector<double> sums(shards, 0.0), sq_sums(shards, 0.0);

    auto run_shard = [&](std::uint32_t s) {
        const std::uint64_t count = base + (s < extra ? 1 : 0);
        double sum = 0.0, sq = 0.0;
        for (std::uint64_t i = 0; i < count; ++i) {
            const double v = h(s, i);
            sum += v;
            sq += v * v;
        }
        sums[s] = sum;
        sq_sums[s] = sq;
    };

    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long s = 0; s < static_cast<long long>(shards); ++s)
            run_shard(static_cast<std::uint32_t>(s));
    } else {
        for (std::uint32_t s = 0; s < shards; ++s) run_shard(s);
    }

    // fixed combination order
    double sum = 0.0, sq = 0.0;
    for (std::uint32_t s = 0; s < shards; ++s) {
        sum += sums[s];
        sq += sq_sums[s];
    }

    McEstimate est;
    est.samples = n_samples;
    const double n = static_cast<double>(n_samples);
    est.mean = sum / n;
    if (n_samples > 1) {
        const double var = std::max(0.0, (sq - n * est.mean * est.mean) / (n - 1.0));
        est.std_error = std::sqrt(var / n);
    }
    return est;
}

} // namespace sbl
