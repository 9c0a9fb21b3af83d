// Throughput comparison of the OpenMP kernels against their serial reference
// implementations. The pairs compute identical results (see the unit tests);
// this target measures the speedup only.

#include <benchmark/benchmark.h>

#include <cmath>

#include "sbl/analysis.hpp"
#include "sbl/evaluator.hpp"
#include "sbl/feasibility.hpp"
#include "sbl/mc.hpp"

using namespace sbl;

namespace {

GaussianMixture bench_mixture(std::uint64_t stream, Eigen::Index dim) {
    GaussianMixture f(dim);
    for (int term = 0; term < 2; ++term) {
        Eigen::VectorXd center(dim);
        for (Eigen::Index k = 0; k < dim; ++k)
            center(k) = 0.4 * counter_normal(5, stream, 16 * term + static_cast<std::uint64_t>(k));
        f.add_term(term == 0 ? 1.0 : 0.5, center,
                   Eigen::MatrixXd::Identity(dim, dim) * (0.7 + 0.3 * term));
    }
    return f;
}

FunctionAssignment bench_tuple() {
    FunctionAssignment tuple;
    tuple.m = 2;
    tuple.d = 1;
    std::uint64_t stream = 1;
    for (const auto& j : all_corners(2)) tuple.functions.emplace(j, bench_mixture(stream++, 2));
    return tuple;
}

void bm_mc_delta(benchmark::State& state, Exec exec) {
    const RationalMatrix a = RationalMatrix::parse("-1 1/4; 0 -1");
    const FunctionAssignment tuple = bench_tuple();
    McOptions opts;
    opts.samples = static_cast<std::uint64_t>(state.range(0));
    opts.exec = exec;
    for (auto _ : state) {
        const auto r = eval_delta_form_mc(a, 1, tuple, opts);
        benchmark::DoNotOptimize(r.value);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_stick_grid(benchmark::State& state, Exec exec) {
    const RationalMatrix a = RationalMatrix::parse("-1 0 0; 0 -1 1/4; 1/4 0 -1");
    Eigen::VectorXd gamma(3);
    gamma << 1.0, 0.5, -0.25;
    gamma.normalize();
    for (auto _ : state) {
        const double v = stick_grid_min(a, 1, 0, gamma, 0.25, 1, 1, 1,
                                        static_cast<int>(state.range(0)), exec);
        benchmark::DoNotOptimize(v);
    }
}

void bm_symbol_sweep(benchmark::State& state, Exec exec) {
    const Multiplier khat = heat_difference_multiplier(16.0);
    SymbolGrid grid;
    grid.radii = static_cast<int>(state.range(0));
    grid.directions = 32;
    for (auto _ : state) {
        const auto r = cz_symbol_check(khat, 2, 3, grid, std::nullopt, 1, exec);
        benchmark::DoNotOptimize(r.worst_ratio);
    }
}

void bm_equivalence_sweep(benchmark::State& state, Exec exec) {
    std::vector<CubicalData> instances;
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(state.range(0)); ++t) {
        RationalMatrix a(2, 2);
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const double u = counter_uniform01(17, t, c++);
                a.at(i, j) = Rational(static_cast<long>(u * 7.0) - 3, 2);
            }
        instances.push_back(CubicalData::make(2, 1, RationalMatrix::identity(2), a));
    }
    for (auto _ : state) {
        const auto flags = map_values(
            instances.size(),
            [&](std::size_t i) {
                const auto rep = check_conditions(instances[i]);
                return rep.condition1 == rep.condition2 ? 1.0 : 0.0;
            },
            exec);
        benchmark::DoNotOptimize(flags.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK_CAPTURE(bm_mc_delta, serial, Exec::Serial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_mc_delta, parallel, Exec::Parallel)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_stick_grid, serial, Exec::Serial)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_stick_grid, parallel, Exec::Parallel)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_symbol_sweep, serial, Exec::Serial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_symbol_sweep, parallel, Exec::Parallel)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_equivalence_sweep, serial, Exec::Serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_equivalence_sweep, parallel, Exec::Parallel)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
