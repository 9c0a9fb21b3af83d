#pragma once

#include <cstddef>
#include <vector>

namespace sbl {

/// Execution mode for the data-parallel kernels. Every parallel kernel has a
/// serial twin with identical reduction order; results match bit for bit.
enum class Exec { Serial, Parallel };

/// max over f(0..n-1). Order-independent reduction, so the OpenMP variant is
/// exactly reproducible.
template <class F>
double reduce_max(std::size_t n, F&& f, Exec exec) {
    double best = -1.0 / 0.0;
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) reduction(max : best)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            const double v = f(static_cast<std::size_t>(i));
            if (v > best) best = v;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double v = f(i);
            if (v > best) best = v;
        }
    }
    return best;
}

template <class F>
double reduce_min(std::size_t n, F&& f, Exec exec) {
    double best = 1.0 / 0.0;
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) reduction(min : best)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            const double v = f(static_cast<std::size_t>(i));
            if (v < best) best = v;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double v = f(i);
            if (v < best) best = v;
        }
    }
    return best;
}

/// Evaluates f into a vector; embarrassingly parallel, deterministic output.
template <class F>
std::vector<double> map_values(std::size_t n, F&& f, Exec exec) {
    std::vector<double> out(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    }
    return out;
}

} // namespace sbl
