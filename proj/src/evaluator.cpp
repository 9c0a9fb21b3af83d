#include "sbl/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sbl/analysis.hpp"
#include "sbl/errors.hpp"
#include "sbl/quadrature.hpp"

namespace sbl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kComboCap = 1'000'000;

// Pullback of a whole mixture along z -> L z + shift, as QuadExp terms.
std::vector<QuadExp> pulled_terms(const GaussianMixture& f, const Eigen::MatrixXd& l,
                                  const Eigen::VectorXd& shift) {
    std::vector<QuadExp> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) out.push_back(qe_pullback(to_quadexp(t), l, shift));
    return out;
}

// All products across the factor lists (the integrand's term expansion).
std::vector<QuadExp> product_fold(Eigen::Index dim, const std::vector<std::vector<QuadExp>>& factors) {
    std::size_t combos = 1;
    for (const auto& f : factors) {
        if (f.empty()) return {};
        combos *= f.size();
        if (combos > kComboCap) throw TermLimitError("product expansion exceeds the term cap");
    }
    QuadExp unit;
    unit.coeff = 1.0;
    unit.Q = Eigen::MatrixXd::Zero(dim, dim);
    unit.b = Eigen::VectorXd::Zero(dim);
    std::vector<QuadExp> acc{unit};
    for (const auto& f : factors) {
        std::vector<QuadExp> next;
        next.reserve(acc.size() * f.size());
        for (const auto& a : acc)
            for (const auto& t : f) next.push_back(qe_product(a, t));
        acc = std::move(next);
    }
    return acc;
}

// x = (-A v, v): the kernel parametrization of (I A), as a 2dm x dm map.
Eigen::MatrixXd delta_parametrization(const RationalMatrix& a, std::size_t d) {
    const std::size_t m = a.rows();
    const Eigen::MatrixXd af = to_eigen(a.block_expand(d));
    const Eigen::Index dm = static_cast<Eigen::Index>(d * m);
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(2 * dm, dm);
    l.topRows(dm) = -af;
    l.bottomRows(dm) = Eigen::MatrixXd::Identity(dm, dm);
    return l;
}

void require_tuple(const RationalMatrix& a, std::size_t d, const FunctionAssignment& tuple) {
    if (!a.square()) throw ShapeError("A must be square");
    if (tuple.m != a.rows() || tuple.d != d) throw ShapeError("tuple dimensions do not match A");
    tuple.validate();
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

GaussianMixture heat_difference_spatial(double T, Eigen::Index n) {
    if (!(T >= 1.0)) throw PreconditionError("heat difference kernel needs T >= 1");
    // multiplier exp(-pi a |xi|^2) has spatial kernel a^{-n/2} exp(-pi |x|^2 / a)
    GaussianMixture k(n);
    const double nd = static_cast<double>(n);
    const double a1 = 2.0 / (T * T), a2 = 2.0 * T * T;
    k.add_term(std::pow(a1, -0.5 * nd), Eigen::VectorXd::Zero(n),
               Eigen::MatrixXd::Identity(n, n) / a1);
    k.add_term(-std::pow(a2, -0.5 * nd), Eigen::VectorXd::Zero(n),
               Eigen::MatrixXd::Identity(n, n) / a2);
    return k;
}

FormResult eval_delta_form(const RationalMatrix& a, std::size_t d, const FunctionAssignment& tuple) {
    require_tuple(a, d, tuple);
    const std::size_t m = a.rows();
    const Eigen::Index dm = static_cast<Eigen::Index>(d * m);
    const Eigen::MatrixXd param = delta_parametrization(a, d);

    std::vector<std::vector<QuadExp>> factors;
    for (const auto& j : all_corners(m)) {
        const Eigen::MatrixXd pj = to_eigen(corner_projection(m, d, j)) * param;
        factors.push_back(pulled_terms(tuple.at(j), pj, Eigen::VectorXd::Zero(dm)));
    }
    const auto combos = product_fold(dm, factors);
    FormResult res;
    res.method = EvalMethod::ExactGaussian;
    res.evaluations = combos.size();
    for (const auto& t : combos) res.value += qe_integral(t);
    return res;
}

FormResult eval_form_mixture_kernel(const GaussianMixture& kernel_spatial, const RationalMatrix& a,
                                    std::size_t d, const FunctionAssignment& tuple) {
    require_tuple(a, d, tuple);
    const std::size_t m = a.rows();
    const Eigen::Index dm = static_cast<Eigen::Index>(d * m);
    if (kernel_spatial.dim() != dm) throw ShapeError("spatial kernel lives on R^{dm}");

    // (I A) as a dm x 2dm map
    Eigen::MatrixXd ia(dm, 2 * dm);
    ia.leftCols(dm) = Eigen::MatrixXd::Identity(dm, dm);
    ia.rightCols(dm) = to_eigen(a.block_expand(d));

    std::vector<std::vector<QuadExp>> factors;
    for (const auto& j : all_corners(m)) {
        const Eigen::MatrixXd pj = to_eigen(corner_projection(m, d, j));
        factors.push_back(pulled_terms(tuple.at(j), pj, Eigen::VectorXd::Zero(dm)));
    }
    factors.push_back(pulled_terms(kernel_spatial, ia, Eigen::VectorXd::Zero(dm)));

    const auto combos = product_fold(2 * dm, factors);
    FormResult res;
    res.method = EvalMethod::ExactGaussian;
    res.evaluations = combos.size();
    for (const auto& t : combos) res.value += qe_integral(t);
    return res;
}

namespace {

FormResult eval_deriv_gauss(const DerivGaussScaleKernel& k, const RationalMatrix& a, std::size_t d,
                            const FunctionAssignment& tuple) {
    require_tuple(a, d, tuple);
    const std::size_t m = a.rows();
    if (k.i < 1 || k.i > m || k.k1 < 1 || k.k1 > d || k.k2 < 1 || k.k2 > d)
        throw IndexError("kernel indices out of range");
    if (!(0.0 < k.t_min && k.t_min < k.t_max)) throw PreconditionError("need 0 < t_min < t_max");
    const Eigen::Index dm = static_cast<Eigen::Index>(d * m);
    if (k.u.size() != dm) throw ShapeError("u must lie in R^{dm}");

    // joint variable z = (x, p) in R^{3dm}
    const Eigen::Index zdim = 3 * dm;
    std::vector<std::vector<QuadExp>> factors;
    for (const auto& j : all_corners(m)) {
        Eigen::MatrixXd pj = Eigen::MatrixXd::Zero(dm, zdim);
        pj.leftCols(2 * dm) = to_eigen(corner_projection(m, d, j));
        factors.push_back(pulled_terms(tuple.at(j), pj, Eigen::VectorXd::Zero(dm)));
    }
    const auto f_combos = product_fold(zdim, factors);

    // w(z) = (x + S p)/t + (u, 0) with S = (-A; I)
    Eigen::MatrixXd s(2 * dm, dm);
    s.topRows(dm) = -to_eigen(a.block_expand(d));
    s.bottomRows(dm) = Eigen::MatrixXd::Identity(dm, dm);
    Eigen::MatrixXd xs(2 * dm, zdim);
    xs.leftCols(2 * dm) = Eigen::MatrixXd::Identity(2 * dm, 2 * dm);
    xs.rightCols(dm) = s;
    Eigen::VectorXd u_hat = Eigen::VectorXd::Zero(2 * dm);
    u_hat.head(dm) = k.u;

    const Eigen::Index a_idx = static_cast<Eigen::Index>((k.i - 1) * d + (k.k1 - 1));
    const Eigen::Index b_idx = static_cast<Eigen::Index>((k.i + m - 1) * d + (k.k2 - 1));

    QuadExp base;
    base.coeff = 1.0;
    base.Q = Eigen::MatrixXd::Identity(2 * dm, 2 * dm);
    base.b = Eigen::VectorXd::Zero(2 * dm);
    base.c = 0.0;

    const auto node_value = [&](double t) {
        const Eigen::MatrixXd lw = xs / t;
        const QuadExp kernel_part = qe_pullback(base, lw, u_hat);
        const Eigen::VectorXd v1 = lw.row(a_idx).transpose();
        const Eigen::VectorXd v2 = lw.row(b_idx).transpose();
        const double a1 = u_hat(a_idx), a2 = u_hat(b_idx);
        double sum = 0.0;
        for (const auto& f : f_combos)
            sum += qe_integral_bilinear(qe_product(f, kernel_part), v1, a1, v2, a2);
        const double dil = std::pow(t, -2.0 * static_cast<double>(dm));
        return k.c(t) * dil * 4.0 * kPi * kPi * sum;
    };

    FormResult res;
    res.method = EvalMethod::ExactGaussian;
    res.value = integrate_log_scale(node_value, k.t_min, k.t_max, 64);
    res.evaluations = f_combos.size();
    return res;
}

} // namespace

FormResult eval_form(const KernelSpec& kernel, const RationalMatrix& a, std::size_t d,
                     const FunctionAssignment& tuple) {
    if (std::holds_alternative<DiracKernel>(kernel)) return eval_delta_form(a, d, tuple);
    if (const auto* h = std::get_if<HeatDifferenceKernel>(&kernel)) {
        const Eigen::Index dm = static_cast<Eigen::Index>(d * a.rows());
        return eval_form_mixture_kernel(heat_difference_spatial(h->T, dm), a, d, tuple);
    }
    return eval_deriv_gauss(std::get<DerivGaussScaleKernel>(kernel), a, d, tuple);
}

FormResult eval_delta_form_mc(const RationalMatrix& a, std::size_t d, const FunctionAssignment& tuple,
                              const McOptions& opts) {
    require_tuple(a, d, tuple);
    const std::size_t m = a.rows();
    const Eigen::Index dm = static_cast<Eigen::Index>(d * m);
    const Eigen::MatrixXd param = delta_parametrization(a, d);

    // per-corner pulled-back mixtures in the v variable
    std::vector<std::vector<QuadExp>> corner_terms;
    for (const auto& j : all_corners(m)) {
        const Eigen::MatrixXd pj = to_eigen(corner_projection(m, d, j)) * param;
        corner_terms.push_back(pulled_terms(tuple.at(j), pj, Eigen::VectorXd::Zero(dm)));
    }

    // Proposal center/shape: the product of each corner's first term (the
    // minimum-variance Gaussian envelope of the integrand's product form).
    // Sampling uses a defensive half/half mixture of that envelope with a
    // 4x-covariance dilate so the importance weights stay bounded for
    // mixtures whose remaining terms decay more slowly than the first.
    QuadExp envelope;
    envelope.coeff = 1.0;
    envelope.Q = Eigen::MatrixXd::Zero(dm, dm);
    envelope.b = Eigen::VectorXd::Zero(dm);
    for (const auto& terms : corner_terms) {
        if (terms.empty()) return {0.0, EvalMethod::MonteCarlo, 0.0, 0, opts.seed};
        envelope = qe_product(envelope, terms.front());
    }
    Eigen::LLT<Eigen::MatrixXd> llt(envelope.Q);
    if (llt.info() != Eigen::Success)
        throw DefinitenessError("proposal envelope is not positive definite");
    const Eigen::VectorXd mu = llt.solve(envelope.b);
    // covariance Q^{-1} / (2 pi): factor C = L^{-T} / sqrt(2 pi)
    const Eigen::MatrixXd lmat = llt.matrixL();
    const Eigen::MatrixXd c_fac =
        lmat.transpose().triangularView<Eigen::Upper>().solve(
            Eigen::MatrixXd::Identity(dm, dm)) /
        std::sqrt(2.0 * kPi);
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < dm; ++i) logdet += std::log(lmat(i, i));
    const double q_norm = std::exp(logdet);  // det(Q)^{1/2}
    const double wide = 2.0;                 // std-dev dilation of the wide component
    const double q_norm_wide = q_norm / std::pow(wide, static_cast<double>(dm));

    const auto integrand = [&](const Eigen::VectorXd& v) {
        double prod = 1.0;
        for (const auto& terms : corner_terms) {
            double s = 0.0;
            for (const auto& t : terms) s += t.value(v);
            prod *= s;
        }
        return prod;
    };
    const auto proposal_density = [&](const Eigen::VectorXd& v) {
        const Eigen::VectorXd y = v - mu;
        const double quad = y.dot(envelope.Q * y);
        return 0.5 * q_norm * std::exp(-kPi * quad) +
               0.5 * q_norm_wide * std::exp(-kPi * quad / (wide * wide));
    };

    const std::uint64_t dim_u = static_cast<std::uint64_t>(dm);
    const auto sample_weight = [&](std::uint64_t shard, std::uint64_t idx) {
        Eigen::VectorXd z(dm);
        for (std::uint64_t c = 0; c < dim_u; ++c)
            z(static_cast<Eigen::Index>(c)) = counter_normal(opts.seed, shard + 1, idx * dim_u + c);
        // stratified component choice: even indices narrow, odd indices wide
        const Eigen::VectorXd step = (idx % 2 == 0 ? 1.0 : wide) * (c_fac * z);
        const Eigen::VectorXd vp = mu + step, vm = mu - step;
        const double wp = integrand(vp) / proposal_density(vp);
        const double wm = integrand(vm) / proposal_density(vm);
        return 0.5 * (wp + wm);   // antithetic pair
    };

    const McEstimate est = mc_mean_sharded(opts.samples, opts.shards, opts.exec, sample_weight);
    FormResult res;
    res.method = EvalMethod::MonteCarlo;
    res.value = est.mean;
    res.std_error = est.std_error;
    res.evaluations = 2 * est.samples;
    res.seed = opts.seed;
    return res;
}

// ---- symmetries ------------------------------------------------------------------

namespace {

GaussianMixture pullback_mixture(const GaussianMixture& f, const Eigen::MatrixXd& dmat,
                                 const Eigen::MatrixXd& dinv, double coeff_scale) {
    GaussianMixture out(f.dim());
    for (const auto& t : f.terms()) {
        Eigen::MatrixXd q = dmat.transpose() * t.quad * dmat;
        q = 0.5 * (q + q.transpose());
        out.add_term(coeff_scale * t.coeff, dinv * t.center, std::move(q));
    }
    return out;
}

void require_symmetry_data(const CubicalData& data, const FunctionAssignment& tuple) {
    if (!(data.B == RationalMatrix::identity(data.m)))
        throw PreconditionError("symmetry checks need the normal form B = I");
    if (!data.exponents_sum_to_one())
        throw PreconditionError("reciprocal exponents must sum to 1");
    if (tuple.m != data.m || tuple.d != data.d) throw ShapeError("tuple does not match instance");
}

} // namespace

SymmetryCheck apply_symmetry(const SymmetryOp& op, const CubicalData& data,
                             const FunctionAssignment& tuple, const KernelSpec& kernel) {
    require_symmetry_data(data, tuple);
    tuple.validate();
    const std::size_t m = data.m, d = data.d;
    const Eigen::Index dm = static_cast<Eigen::Index>(d * m);

    SymmetryCheck out;
    out.lhs = eval_form(kernel, data.A, d, tuple).value;

    if (const auto* sc = std::get_if<ScaleSymmetry>(&op)) {
        if (sc->diag.size() != m) throw ShapeError("scale symmetry needs m diagonal entries");
        Rational det_d(1);
        for (const auto& x : sc->diag) {
            if (x.is_zero()) throw PreconditionError("singular D in scale symmetry");
            det_d *= x;
        }
        const RationalMatrix dr = RationalMatrix::diagonal(sc->diag);
        const RationalMatrix a_t = dr.inverse() * data.A * dr;
        const double abs_det = std::abs(det_d.to_double());
        const Eigen::MatrixXd dmat = to_eigen(dr.block_expand(d));
        const Eigen::MatrixXd dinv = to_eigen(dr.inverse().block_expand(d));

        FunctionAssignment tuple_t;
        tuple_t.m = m;
        tuple_t.d = d;
        tuple_t.symmetry_level = 0;
        for (const auto& j : all_corners(m)) {
            const double scale = std::pow(abs_det, static_cast<double>(d) / data.exponent(j).to_double());
            tuple_t.functions.emplace(j, pullback_mixture(tuple.at(j), dmat, dinv, scale));
        }

        CubicalData data_t = data;
        data_t.A = a_t;

        if (std::holds_alternative<DiracKernel>(kernel)) {
            out.rhs = eval_delta_form(a_t, d, tuple_t).value;
        } else if (const auto* h = std::get_if<HeatDifferenceKernel>(&kernel)) {
            const GaussianMixture base = heat_difference_spatial(h->T, dm);
            const GaussianMixture k_t =
                pullback_mixture(base, dmat, dinv, std::pow(abs_det, static_cast<double>(d)));
            out.rhs = eval_form_mixture_kernel(k_t, a_t, d, tuple_t).value;
        } else {
            throw RouteError("scale symmetry is implemented for Dirac and heat-difference kernels");
        }
        out.transformed_data = std::move(data_t);
        out.transformed_tuple = std::move(tuple_t);
        return out;
    }

    const auto& pm = std::get<PermuteSymmetry>(op);
    if (pm.perm.size() != m) throw ShapeError("permutation must have m entries");
    std::vector<bool> seen(m + 1, false);
    for (std::size_t v : pm.perm) {
        if (v < 1 || v > m || seen[v]) throw PreconditionError("not a permutation of 1..m");
        seen[v] = true;
    }

    // P with (P y)_i = y_{sigma(i)}
    RationalMatrix p(m, m);
    for (std::size_t i = 0; i < m; ++i) p.at(i, pm.perm[i] - 1) = Rational(1);
    const RationalMatrix a_t = p.inverse() * data.A * p;
    const Eigen::MatrixXd pmat = to_eigen(p.block_expand(d));
    const Eigen::MatrixXd pinv = to_eigen(p.inverse().block_expand(d));

    FunctionAssignment tuple_t;
    tuple_t.m = m;
    tuple_t.d = d;
    tuple_t.symmetry_level = 0;
    CubicalData data_t = data;
    data_t.A = a_t;
    data_t.exponents.clear();
    for (const auto& j : all_corners(m)) {
        CubeIndex jp = j;   // j o P: (j o P)(i) = j(sigma(i))
        for (std::size_t i = 1; i <= m; ++i) jp.set_bit(i, j.bit(pm.perm[i - 1]));
        tuple_t.functions.emplace(j, pullback_mixture(tuple.at(jp), pmat, pinv, 1.0));
        data_t.exponents.emplace(j, data.exponent(jp));
    }

    if (std::holds_alternative<DiracKernel>(kernel)) {
        out.rhs = eval_delta_form(a_t, d, tuple_t).value;
    } else if (std::holds_alternative<HeatDifferenceKernel>(kernel)) {
        // radial multiplier: K o P = K
        out.rhs = eval_form(kernel, a_t, d, tuple_t).value;
    } else {
        throw RouteError("permutation symmetry is implemented for Dirac and heat-difference kernels");
    }
    out.transformed_data = std::move(data_t);
    out.transformed_tuple = std::move(tuple_t);
    return out;
}

// ---- sweep and blow-up -----------------------------------------------------------

double tuple_norm_product(const CubicalData& data, const FunctionAssignment& tuple) {
    double prod = 1.0;
    for (const auto& j : all_corners(data.m))
        prod *= lp_norm(tuple.at(j), even_integer_exponent(data.exponent(j)));
    return prod;
}

SweepResult sweep_truncation(const CubicalData& data, const FunctionAssignment& tuple,
                             const std::vector<double>& t_list) {
    if (!(data.B == RationalMatrix::identity(data.m)))
        throw PreconditionError("sweep needs the normal form B = I");
    SweepResult out;
    try {
        out.feasible = check_conditions(data).feasible();
    } catch (const PreconditionError&) {
        out.feasible = false;
    }
    out.norm_product = tuple_norm_product(data, tuple);
    out.dirac_value = eval_delta_form(data.A, data.d, tuple).value;
    out.dirac_ratio = out.dirac_value / out.norm_product;
    for (double t : t_list) {
        SweepPoint pt;
        pt.T = t;
        pt.result = eval_form(HeatDifferenceKernel{t}, data.A, data.d, tuple);
        pt.ratio = pt.result.value / out.norm_product;
        out.points.push_back(std::move(pt));
    }
    return out;
}

FormResult eval_delta_form_general(const GeneralInstance& inst,
                                   const std::vector<GaussianMixture>& functions) {
    inst.validate();
    if (functions.size() != inst.projections.size())
        throw ShapeError("one function per projection expected");
    const auto kernel = inst.pi.kernel_basis();
    if (kernel.empty()) throw PreconditionError("Pi has trivial kernel; the delta form degenerates");
    const RationalMatrix kmat = basis_matrix(kernel);
    const Eigen::Index kdim = static_cast<Eigen::Index>(kernel.size());

    // delta of Pi x restricted to the parametrization x = K v picks up
    // sqrt(det(K^T K) / det(Pi Pi^T)); both Gram determinants are exact.
    const double gram_k = (kmat.transpose() * kmat).det().to_double();
    const double gram_pi = (inst.pi * inst.pi.transpose()).det().to_double();
    const double factor = std::sqrt(gram_k / gram_pi);

    const Eigen::MatrixXd kf = to_eigen(kmat);
    std::vector<std::vector<QuadExp>> factors;
    for (std::size_t i = 0; i < functions.size(); ++i) {
        if (functions[i].dim() != static_cast<Eigen::Index>(inst.projections[i].rows()))
            throw ShapeError("function dimension does not match its projection");
        const Eigen::MatrixXd l = to_eigen(inst.projections[i]) * kf;
        factors.push_back(pulled_terms(functions[i], l, Eigen::VectorXd::Zero(functions[i].dim())));
    }
    const auto combos = product_fold(kdim, factors);
    FormResult res;
    res.method = EvalMethod::ExactGaussian;
    res.evaluations = combos.size();
    for (const auto& t : combos) res.value += qe_integral(t);
    res.value *= factor;
    return res;
}

BlowupResult blowup_experiment_general(const GeneralInstance& inst,
                                       const std::vector<RationalVector>& v_basis,
                                       const std::vector<double>& r_list) {
    if (r_list.size() < 2) throw PreconditionError("blow-up needs at least two scales");
    const Rational gap = bcct_gap(inst.pi, v_basis, inst.projections, inst.exponents);
    if (!(gap.sign() > 0))
        throw PreconditionError("experiment refused: the dimension gap at V is not positive");

    BlowupResult out;
    out.predicted_gap = gap;
    std::vector<double> lx, ly;
    for (double r : r_list) {
        const auto fs = bcct_witness_general(inst, v_basis, r);
        BlowupPoint pt;
        pt.R = r;
        pt.form = eval_delta_form_general(inst, fs);
        double norms = 1.0;
        for (std::size_t i = 0; i < fs.size(); ++i)
            norms *= lp_norm(fs[i], even_integer_exponent(inst.exponents[i]));
        pt.ratio = std::abs(pt.form.value) / norms;
        lx.push_back(std::log(r));
        ly.push_back(std::log(pt.ratio));
        out.points.push_back(std::move(pt));
    }
    out.slope = least_squares_slope(lx, ly);
    return out;
}

BlowupResult blowup_experiment(const CubicalData& data, const std::vector<RationalVector>& v_basis,
                               const std::vector<double>& r_list) {
    if (r_list.size() < 2) throw PreconditionError("blow-up needs at least two scales");
    RationalMatrix a_norm;
    try {
        a_norm = normalize_to_identity(data);
    } catch (const SingularBlockError&) {
        throw PreconditionError("blow-up experiment needs a regular B block");
    }

    std::vector<RationalMatrix> projections;
    std::vector<Rational> exponents;
    for (const auto& j : all_corners(data.m)) {
        projections.push_back(corner_projection(data.m, data.d, j));
        exponents.push_back(data.exponent(j));
    }
    const Rational gap = bcct_gap(data.pi_scalar(), v_basis, projections, exponents);
    if (!(gap.sign() > 0))
        throw PreconditionError("experiment refused: the dimension gap at V is not positive");

    const double det_b_factor =
        std::pow(std::abs(data.B.det().to_double()), -static_cast<double>(data.d));

    BlowupResult out;
    out.predicted_gap = gap;
    std::vector<double> lx, ly;
    for (double r : r_list) {
        const FunctionAssignment tuple = bcct_witness(data, v_basis, r);
        BlowupPoint pt;
        pt.R = r;
        pt.form = eval_delta_form(a_norm, data.d, tuple);
        pt.form.value *= det_b_factor;
        pt.ratio = std::abs(pt.form.value) / tuple_norm_product(data, tuple);
        lx.push_back(std::log(r));
        ly.push_back(std::log(pt.ratio));
        out.points.push_back(std::move(pt));
    }
    out.slope = least_squares_slope(lx, ly);
    return out;
}

} // namespace sbl
