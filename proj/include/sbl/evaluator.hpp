#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "sbl/feasibility.hpp"
#include "sbl/gaussian.hpp"
#include "sbl/instance.hpp"
#include "sbl/kernels.hpp"
#include "sbl/mc.hpp"

namespace sbl {

enum class EvalMethod { ExactGaussian, MonteCarlo };

struct FormResult {
    double value = 0.0;
    EvalMethod method = EvalMethod::ExactGaussian;
    double std_error = 0.0;       // 0 for exact
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;       // recorded for Monte Carlo runs
};

struct McOptions {
    std::uint64_t samples = 1'000'000;  // antithetic pairs
    std::uint64_t seed = 0;
    std::uint32_t shards = 256;
    Exec exec = Exec::Parallel;
};

/// Lambda(delta_0, A): the delta-kernel form, exactly, by pulling the tuple
/// back along the kernel parametrization x = (-A v, v).
FormResult eval_delta_form(const RationalMatrix& a, std::size_t d, const FunctionAssignment& tuple);

/// Monte Carlo route for the delta form: importance sampling from the
/// product-Gaussian envelope, antithetic pairs, counter-based substreams.
/// Bit-for-bit reproducible for fixed (seed, shards).
FormResult eval_delta_form_mc(const RationalMatrix& a, std::size_t d, const FunctionAssignment& tuple,
                              const McOptions& opts);

/// Lambda(K, A) with a spatial Gaussian-mixture kernel on R^{dm}, exactly.
FormResult eval_form_mixture_kernel(const GaussianMixture& kernel_spatial, const RationalMatrix& a,
                                    std::size_t d, const FunctionAssignment& tuple);

/// Exact route for any KernelSpec. Dirac dispatches to the delta form;
/// HeatDifference to the 2-term spatial mixture; DerivGaussScale to the
/// scale-integral spatial formula with exact inner integrals and
/// Gauss-Legendre nodes in log t (64 per decade).
FormResult eval_form(const KernelSpec& kernel, const RationalMatrix& a, std::size_t d,
                     const FunctionAssignment& tuple);

// ---- symmetries -------------------------------------------------------------

struct ScaleSymmetry {
    RationalVector diag;   // m nonzero entries
};
struct PermuteSymmetry {
    std::vector<std::size_t> perm;  // sigma(1..m), 1-based values
};
using SymmetryOp = std::variant<ScaleSymmetry, PermuteSymmetry>;

struct SymmetryCheck {
    CubicalData transformed_data;
    FunctionAssignment transformed_tuple;
    double lhs = 0.0;   // original form value
    double rhs = 0.0;   // transformed form value
};

/// Transforms (data, tuple, kernel) per the scaling / permutation symmetry and
/// evaluates both sides on the exact route. Requires B = I and reciprocal
/// exponents summing to 1.
SymmetryCheck apply_symmetry(const SymmetryOp& op, const CubicalData& data,
                             const FunctionAssignment& tuple, const KernelSpec& kernel);

// ---- truncation sweep ----------------------------------------------------------

struct SweepPoint {
    double T = 0.0;
    FormResult result;
    double ratio = 0.0;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    double norm_product = 0.0;   // prod_j ||F_j||_{p_j}
    double dirac_value = 0.0;
    double dirac_ratio = 0.0;    // the limiting ratio
    bool feasible = false;       // flagged, not required
};

SweepResult sweep_truncation(const CubicalData& data, const FunctionAssignment& tuple,
                             const std::vector<double>& t_list);

// ---- blow-up experiment -----------------------------------------------------------

struct BlowupPoint {
    double R = 0.0;
    double ratio = 0.0;
    FormResult form;
};

struct BlowupResult {
    double slope = 0.0;          // least-squares log-log fit
    Rational predicted_gap;      // exact dimension gap of V
    std::vector<BlowupPoint> points;
};

/// Builds the Gaussian witness at each scale R, evaluates the Dirac-form
/// ratio, and fits log(ratio) against log(R). Refuses (PreconditionError)
/// when the gap at V is not positive.
BlowupResult blowup_experiment(const CubicalData& data, const std::vector<RationalVector>& v_basis,
                               const std::vector<double>& r_list);

/// Delta form for a non-cubical instance: integrates the pulled-back product
/// over a kernel parametrization of Pi, with the exact Gram/Jacobian factors.
FormResult eval_delta_form_general(const GeneralInstance& inst,
                                   const std::vector<GaussianMixture>& functions);

BlowupResult blowup_experiment_general(const GeneralInstance& inst,
                                       const std::vector<RationalVector>& v_basis,
                                       const std::vector<double>& r_list);

/// prod_j ||F_j||_{p_j} with the instance's exponents (must be even integers).
double tuple_norm_product(const CubicalData& data, const FunctionAssignment& tuple);

} // namespace sbl
