#pragma once

#include <cstdint>
#include <functional>

#include "sbl/par.hpp"

namespace sbl {

/// Stateless counter-based uniform stream: every (seed, stream, counter)
/// triple maps to one value, so shards are independent substreams and the
/// sample sequence does not depend on thread count.
double counter_uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Standard normal via Box-Muller over counters (2 idx, 2 idx + 1).
double counter_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t idx);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

/// Sharded sample mean of h(shard, index_in_shard). Per-shard partials are
/// accumulated serially and combined in shard order, so the result is
/// bit-identical between Exec::Serial and Exec::Parallel and across thread
/// counts for a fixed (seed, shard count).
McEstimate mc_mean_sharded(std::uint64_t n_samples, std::uint32_t shards, Exec exec,
                           const std::function<double(std::uint64_t, std::uint64_t)>& h);

} // namespace sbl
