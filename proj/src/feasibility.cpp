#include "sbl/feasibility.hpp"

#include <algorithm>
#include <cmath>

#include "sbl/errors.hpp"

namespace sbl {

RationalMatrix normalize_to_identity(const CubicalData& data) {
    const auto kernel = data.B.kernel_basis();
    if (!kernel.empty()) throw SingularBlockError(kernel.front());
    return data.B.inverse() * data.A;
}

FeasibilityReport check_conditions(const CubicalData& data) {
    data.validate();
    const RationalMatrix pi = data.pi_scalar();
    const std::size_t full = data.d * data.m;
    if (pi.rank() != full) throw PreconditionError("Pi = (B A) is not surjective");

    FeasibilityReport rep;
    rep.m = data.m;
    rep.d = data.d;

    // Route 2: corner determinants of the m x m block matrices. The witness
    // is the lexicographically largest failing corner (for A with zero
    // columns that is the all-ones corner).
    rep.condition2 = true;
    for (const auto& j : all_corners(data.m)) {
        Rational det = corner_matrix(data.B, data.A, j).det();
        if (det.is_zero()) {
            rep.condition2 = false;
            rep.witness_corner = j;
        }
        rep.corner_dets.emplace(j, std::move(det));
    }

    // Route 1: rank of each corner projection restricted to ker Pi,
    // materialized at the scalar level.
    const auto kernel = pi.kernel_basis();
    const RationalMatrix kmat = basis_matrix(kernel);
    rep.condition1 = true;
    for (const auto& j : all_corners(data.m)) {
        const std::size_t r =
            kernel.empty() ? 0 : (corner_projection(data.m, data.d, j) * kmat).rank();
        rep.kernel_ranks.emplace(j, r);
        if (r != kernel.size()) rep.condition1 = false;
    }

    // Equality instance of the dimension condition at V = ker Pi, with the
    // instance's exponents.
    Rational weighted(0);
    for (const auto& [j, r] : rep.kernel_ranks)
        weighted += Rational(static_cast<long>(r)) * data.exponent(j).reciprocal();
    rep.bcct_equality_at_kernel = weighted == Rational(static_cast<long>(kernel.size()));

    try {
        rep.epsilon_star = epsilon_star(normalize_to_identity(data));
    } catch (const SingularBlockError&) {
        rep.epsilon_star = 0.0;
    }
    return rep;
}

double epsilon_star(const RationalMatrix& a) {
    if (!a.square()) throw ShapeError("epsilon_star expects a square matrix");
    const std::size_t m = a.rows();
    const RationalMatrix id = RationalMatrix::identity(m);
    Rational min_abs_det;
    bool first = true;
    for (const auto& j : all_corners(m)) {
        const Rational det = corner_matrix(id, a, j).det().abs();
        if (det.is_zero()) return 0.0;
        if (first || det < min_abs_det) {
            min_abs_det = det;
            first = false;
        }
    }
    const Rational hs = a.hs_norm_sq();
    const double det_branch = min_abs_det.to_double();
    if (hs.is_zero()) return det_branch;
    return std::min(det_branch, 1.0 / std::sqrt(hs.to_double()));
}

Rational bcct_gap(const RationalMatrix& pi, const std::vector<RationalVector>& v_basis,
                  const std::vector<RationalMatrix>& projections, const std::vector<Rational>& exponents) {
    if (projections.size() != exponents.size())
        throw ShapeError("one exponent per projection expected");
    if (v_basis.empty()) return Rational(0);
    for (const auto& v : v_basis) {
        const RationalVector image = pi * v;
        if (!std::all_of(image.begin(), image.end(), [](const Rational& x) { return x.is_zero(); }))
            throw PreconditionError("V is not contained in ker Pi");
    }
    const RationalMatrix vmat = basis_matrix(v_basis);
    Rational gap(static_cast<long>(vmat.rank()));
    for (std::size_t i = 0; i < projections.size(); ++i) {
        const std::size_t r = (projections[i] * vmat).rank();
        gap -= exponents[i].reciprocal() * Rational(static_cast<long>(r));
    }
    return gap;
}

namespace {

void require_eps_hypothesis(const RationalMatrix& a, const Rational& eps) {
    if (eps.sign() <= 0) throw PreconditionError("eps must be positive");
    const std::size_t m = a.rows();
    const RationalMatrix id = RationalMatrix::identity(m);
    for (const auto& j : all_corners(m))
        if (!(corner_matrix(id, a, j).det().abs() > eps))
            throw PreconditionError("corner determinant hypothesis fails at corner " + j.str());
    if (!(a.hs_norm_sq() <= eps.pow(-2)))
        throw PreconditionError("Hilbert-Schmidt hypothesis fails");
}

} // namespace

InverseBounds inverse_bounds(const RationalMatrix& a, const Rational& eps) {
    if (!a.square()) throw ShapeError("inverse_bounds expects a square matrix");
    require_eps_hypothesis(a, eps);
    const std::size_t m = a.rows();

    InverseBounds out;
    out.hs_bound = Rational(static_cast<long>(m)) * eps.pow(-static_cast<long>(m));
    const RationalMatrix inv = a.inverse();
    out.inv_hs_norm_sq = inv.hs_norm_sq();
    out.verified = out.inv_hs_norm_sq <= out.hs_bound * out.hs_bound;

    for (std::size_t k = 1; k < m; ++k) {
        const RationalMatrix a11 = a.submatrix(0, 0, k, k);
        const RationalMatrix a12 = a.submatrix(0, k, k, m - k);
        const RationalMatrix a21 = a.submatrix(k, 0, m - k, k);
        const RationalMatrix a22 = a.submatrix(k, k, m - k, m - k);
        const RationalMatrix x11 = inv.submatrix(0, 0, k, k);
        const RationalMatrix lhs = a12 * a22.inverse() * a21 * x11 - a11 * x11;
        SchurSplitCertificate cert;
        cert.split = k;
        cert.identity_ok = lhs == RationalMatrix::identity(k).scaled(Rational(-1));
        cert.det_x11 = x11.det();
        out.schur_certificates.push_back(std::move(cert));
    }
    return out;
}

std::string to_string(TrilinearCase c) {
    switch (c) {
        case TrilinearCase::Trivial: return "trivial";
        case TrilinearCase::GenericBht: return "generic-bht";
        case TrilinearCase::Hybrid: return "hybrid";
        case TrilinearCase::TwistedParaproduct: return "twisted-paraproduct";
        case TrilinearCase::DegenerateTriangularFamily: return "degenerate-triangular-family";
        case TrilinearCase::Other: return "other";
    }
    return "other";
}

TrilinearCase classify_trilinear(const RationalMatrix& a3, bool degenerate_columns) {
    if (a3.rows() != 2 || a3.cols() != 2) throw ShapeError("classify_trilinear expects a 2 x 2 matrix");
    if (degenerate_columns) return TrilinearCase::DegenerateTriangularFamily;

    const RationalMatrix id = RationalMatrix::identity(2);
    if (a3 == RationalMatrix::zero(2, 2) || a3 == id) return TrilinearCase::Trivial;

    // chi(t) = t^2 - tr t + det, evaluated at 0 and 1.
    const Rational tr = a3.at(0, 0) + a3.at(1, 1);
    const Rational det = a3.det();
    const bool has0 = det.is_zero();
    const bool has1 = (Rational(1) - tr + det).is_zero();

    if (has0 && has1) return TrilinearCase::TwistedParaproduct;
    if (!has0 && !has1) return TrilinearCase::GenericBht;

    // Exactly one of the values 0, 1 is an eigenvalue; the other eigenvalue
    // is tr - v. A double root in {0,1} is not the hybrid case.
    const Rational v = has0 ? Rational(0) : Rational(1);
    const Rational other = tr - v;
    if (other == v) return TrilinearCase::Other;
    return TrilinearCase::Hybrid;
}

GaussianMixture witness_function(const RationalMatrix& projection,
                                 const std::vector<RationalVector>& v_basis, double R) {
    const Eigen::Index n = static_cast<Eigen::Index>(projection.rows());
    Eigen::MatrixXd quad = Eigen::MatrixXd::Identity(n, n);
    if (!v_basis.empty()) {
        const RationalMatrix pv = projection * basis_matrix(v_basis);
        Eigen::MatrixXd w(n, static_cast<Eigen::Index>(pv.cols()));
        for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index c = 0; c < w.cols(); ++c)
                w(r, c) = pv.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).to_double();
        // Orthonormal basis of the column span; rank via column-pivoted QR.
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(w);
        const Eigen::Index rank = qr.rank();
        if (rank > 0) {
            const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, rank);
            quad += (1.0 / (R * R) - 1.0) * (q * q.transpose());
        }
    }
    quad = 0.5 * (quad + quad.transpose());
    return GaussianMixture::single(1.0, Eigen::VectorXd::Zero(n), quad);
}

namespace {

void require_in_kernel(const RationalMatrix& pi, const std::vector<RationalVector>& v_basis) {
    for (const auto& v : v_basis) {
        const RationalVector image = pi * v;
        if (!std::all_of(image.begin(), image.end(), [](const Rational& x) { return x.is_zero(); }))
            throw PreconditionError("V is not contained in ker Pi");
    }
}

} // namespace

FunctionAssignment bcct_witness(const CubicalData& data, const std::vector<RationalVector>& v_basis,
                                double R) {
    if (R <= 0.0) throw PreconditionError("witness scale R must be positive");
    require_in_kernel(data.pi_scalar(), v_basis);

    FunctionAssignment tuple;
    tuple.m = data.m;
    tuple.d = data.d;
    tuple.symmetry_level = 0;
    for (const auto& j : all_corners(data.m))
        tuple.functions.emplace(j, witness_function(corner_projection(data.m, data.d, j), v_basis, R));
    tuple.validate();
    return tuple;
}

void GeneralInstance::validate() const {
    if (projections.size() != exponents.size())
        throw ShapeError("one exponent per projection expected");
    for (const auto& p : projections)
        if (p.cols() != pi.cols()) throw ShapeError("projection domain does not match Pi");
    for (const auto& e : exponents)
        if (e.sign() <= 0) throw PreconditionError("exponents must be positive");
    if (pi.rank() != pi.rows()) throw PreconditionError("Pi must be surjective");
}

std::vector<GaussianMixture> bcct_witness_general(const GeneralInstance& inst,
                                                  const std::vector<RationalVector>& v_basis,
                                                  double R) {
    if (R <= 0.0) throw PreconditionError("witness scale R must be positive");
    inst.validate();
    require_in_kernel(inst.pi, v_basis);
    std::vector<GaussianMixture> out;
    out.reserve(inst.projections.size());
    for (const auto& p : inst.projections) out.push_back(witness_function(p, v_basis, R));
    return out;
}

} // namespace sbl
