#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbl/errors.hpp"
#include "sbl/gaussian.hpp"
#include "sbl/instance.hpp"

namespace sbl {

/// Exact feasibility decision for one cubical instance. condition1 (corner
/// projections injective on ker Pi) and condition2 (corner determinants all
/// nonzero) are computed by independent routes; their agreement is what the
/// equivalence tests assert.
struct FeasibilityReport {
    std::size_t m = 0;
    std::size_t d = 0;
    std::map<CubeIndex, Rational> corner_dets;
    bool condition2 = false;
    bool condition1 = false;
    std::map<CubeIndex, std::size_t> kernel_ranks;
    double epsilon_star = 0.0;
    bool bcct_equality_at_kernel = false;
    std::optional<CubeIndex> witness_corner;

    bool feasible() const { return condition1 && condition2; }
};

/// Thrown by normalize_to_identity when B is singular; carries a kernel
/// vector of B as the infeasibility certificate.
struct SingularBlockError : SingularMatrixError {
    RationalVector kernel_vector;
    explicit SingularBlockError(RationalVector v)
        : SingularMatrixError("B is singular; instance infeasible"), kernel_vector(std::move(v)) {}
};

/// Returns A' = B^{-1} A, so (B A) and (I A') define the same feasibility
/// class. Throws SingularBlockError when B is singular.
RationalMatrix normalize_to_identity(const CubicalData& data);

/// Both regularity conditions, decided exactly. Pi must be surjective.
FeasibilityReport check_conditions(const CubicalData& data);

/// min( min_j |det (I A) Pi_j^T| , hs_norm(A)^{-1} ); 0 when any corner
/// determinant vanishes.
double epsilon_star(const RationalMatrix& a);

/// dim(V) - sum_i (1/p_i) dim(proj_i V), exact. V_basis must span a subspace
/// of ker(pi).
Rational bcct_gap(const RationalMatrix& pi, const std::vector<RationalVector>& v_basis,
                  const std::vector<RationalMatrix>& projections, const std::vector<Rational>& exponents);

struct SchurSplitCertificate {
    std::size_t split = 0;       // size of the leading block
    bool identity_ok = false;    // A12 A22^{-1} A21 X11 - A11 X11 == -I, exactly
    Rational det_x11;
};

struct InverseBounds {
    Rational hs_bound;          // m * eps^{-m}
    bool verified = false;      // hs_norm_sq(A^{-1}) <= hs_bound^2, exactly
    Rational inv_hs_norm_sq;
    std::vector<SchurSplitCertificate> schur_certificates;
};

/// Requires A to satisfy the determinant/HS hypothesis at the given eps.
InverseBounds inverse_bounds(const RationalMatrix& a, const Rational& eps);

enum class TrilinearCase {
    Trivial,
    GenericBht,
    Hybrid,
    TwistedParaproduct,
    DegenerateTriangularFamily,
    Other,
};

std::string to_string(TrilinearCase c);

/// Classification of the trilinear normal forms by eigenvalue membership of
/// A3 in {0,1}, decided exactly through the characteristic polynomial.
TrilinearCase classify_trilinear(const RationalMatrix& a3, bool degenerate_columns);

/// Gaussian surrogate witness: for each corner, wide (width R) along the
/// directions of Pi_j V and unit width transverse.
FunctionAssignment bcct_witness(const CubicalData& data, const std::vector<RationalVector>& v_basis,
                                double R);

/// A non-cubical instance: one surjective Pi plus arbitrary projections and
/// exponents. The dimension-gap, witness, and blow-up machinery accept it.
struct GeneralInstance {
    RationalMatrix pi;
    std::vector<RationalMatrix> projections;
    std::vector<Rational> exponents;

    void validate() const;
};

/// One Gaussian per projection, wide along proj_i V.
std::vector<GaussianMixture> bcct_witness_general(const GeneralInstance& inst,
                                                  const std::vector<RationalVector>& v_basis,
                                                  double R);

/// Width-R/unit-width Gaussian for one projection image of V; the common core
/// of both witness builders.
GaussianMixture witness_function(const RationalMatrix& projection,
                                 const std::vector<RationalVector>& v_basis, double R);

} // namespace sbl
