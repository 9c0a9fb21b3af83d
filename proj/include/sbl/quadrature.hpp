#pragma once

#include <functional>
#include <vector>

namespace sbl {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// Nodes and weights by Newton iteration on the Legendre polynomial; cached.
const GaussLegendreRule& gauss_legendre(int n);

/// integral f(t) dt/t over [t_min, t_max], composite Gauss-Legendre in log t
/// with one panel per decade.
double integrate_log_scale(const std::function<double(double)>& f, double t_min, double t_max,
                           int nodes_per_decade = 64);

/// Adaptive Simpson on [a, b] to the requested absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 40);

} // namespace sbl
