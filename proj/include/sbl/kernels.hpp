#pragma once

#include <Eigen/Dense>

#include <functional>
#include <variant>

#include "sbl/gaussian.hpp"

namespace sbl {

/// K = delta_0, multiplier identically 1.
struct DiracKernel {};

/// Multiplier exp(-2 pi |xi|^2 / T^2) - exp(-2 pi T^2 |xi|^2); both spatial
/// pieces are closed-form Gaussians. T = 1 gives the zero kernel; large T
/// approaches the Dirac case pointwise.
struct HeatDifferenceKernel {
    double T = 2.0;
};

/// The derivative-Gaussian scale-integral kernel with the t-integral
/// truncated to [t_min, t_max]. Indices are 1-based; c is a bounded scale
/// weight with |c| <= 1; u shifts in R^{dm}.
struct DerivGaussScaleKernel {
    std::size_t i = 1;
    std::size_t k1 = 1;
    std::size_t k2 = 1;
    Eigen::VectorXd u;
    std::function<double(double)> c = [](double) { return 1.0; };
    double t_min = 1e-3;
    double t_max = 1e3;
};

using KernelSpec = std::variant<DiracKernel, HeatDifferenceKernel, DerivGaussScaleKernel>;

/// Spatial kernel of the heat-difference multiplier on R^n: the difference of
/// two centered Gaussians.
GaussianMixture heat_difference_spatial(double T, Eigen::Index n);

/// The (real-valued) multiplier of a kernel spec, for symbol sweeps and CSV
/// sampling. DerivGaussScale requires u = 0; a nonzero shift makes the
/// multiplier complex, which the sweep machinery does not model.
std::function<double(const Eigen::VectorXd&)> multiplier_of(const KernelSpec& kernel,
                                                            const RationalMatrix& a, std::size_t d);

} // namespace sbl
