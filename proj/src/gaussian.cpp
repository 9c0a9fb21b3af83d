#include "sbl/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "sbl/errors.hpp"

namespace sbl {

namespace {
constexpr double kPi = std::numbers::pi;

bool is_spd(const Eigen::MatrixXd& q) {
    if (q.rows() != q.cols()) return false;
    if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + q.cwiseAbs().maxCoeff()))
        return false;
    Eigen::LLT<Eigen::MatrixXd> llt(q);
    return llt.info() == Eigen::Success;
}
} // namespace

GaussianMixture GaussianMixture::standard(Eigen::Index dim) {
    GaussianMixture f(dim);
    f.add_term(1.0, Eigen::VectorXd::Zero(dim), Eigen::MatrixXd::Identity(dim, dim));
    return f;
}

GaussianMixture GaussianMixture::single(double coeff, Eigen::VectorXd center, Eigen::MatrixXd quad) {
    GaussianMixture f(center.size());
    f.add_term(coeff, std::move(center), std::move(quad));
    return f;
}

void GaussianMixture::add_term(double coeff, Eigen::VectorXd center, Eigen::MatrixXd quad) {
    if (center.size() != dim_ || quad.rows() != dim_ || quad.cols() != dim_)
        throw ShapeError("gaussian term has inconsistent dimension");
    if (!is_spd(quad)) throw DefinitenessError("gaussian term quad must be symmetric positive definite");
    terms_.push_back({coeff, std::move(center), std::move(quad)});
}

double GaussianMixture::value(const Eigen::VectorXd& x) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        const Eigen::VectorXd y = x - t.center;
        s += t.coeff * std::exp(-kPi * y.dot(t.quad * y));
    }
    return s;
}

GaussianMixture GaussianMixture::scaled(double c) const {
    GaussianMixture f(dim_);
    for (const auto& t : terms_) f.add_term(c * t.coeff, t.center, t.quad);
    return f;
}

bool operator==(const GaussianMixture& a, const GaussianMixture& b) {
    if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& s = a.terms_[i];
        const auto& t = b.terms_[i];
        if (s.coeff != t.coeff || s.center != t.center || s.quad != t.quad) return false;
    }
    return true;
}

double QuadExp::value(const Eigen::VectorXd& x) const {
    return coeff * std::exp(-kPi * x.dot(Q * x) + 2.0 * kPi * b.dot(x) + c);
}

QuadExp to_quadexp(const GaussianTerm& t) {
    QuadExp f;
    f.coeff = t.coeff;
    f.Q = t.quad;
    f.b = t.quad * t.center;
    f.c = -kPi * t.center.dot(f.b);
    return f;
}

QuadExp qe_product(const QuadExp& f, const QuadExp& g) {
    if (f.dim() != g.dim()) throw ShapeError("QuadExp product dimension mismatch");
    return {f.coeff * g.coeff, f.Q + g.Q, f.b + g.b, f.c + g.c};
}

QuadExp qe_pullback(const QuadExp& f, const Eigen::MatrixXd& L, const Eigen::VectorXd& a) {
    if (L.rows() != f.dim() || a.size() != f.dim()) throw ShapeError("QuadExp pullback shape mismatch");
    QuadExp g;
    g.coeff = f.coeff;
    const Eigen::MatrixXd QL = f.Q * L;
    g.Q = L.transpose() * QL;
    g.Q = 0.5 * (g.Q + g.Q.transpose());
    g.b = L.transpose() * (f.b - f.Q * a);
    g.c = f.c + 2.0 * kPi * f.b.dot(a) - kPi * a.dot(f.Q * a);
    return g;
}

namespace {

struct Completed {
    double base;        // integral of exp part
    Eigen::VectorXd mu; // argmax location Q^{-1} b
    Eigen::LLT<Eigen::MatrixXd> llt;
};

Completed complete_square(const QuadExp& f) {
    Eigen::LLT<Eigen::MatrixXd> llt(f.Q);
    if (llt.info() != Eigen::Success)
        throw DefinitenessError("quadratic form is not positive definite");
    Completed out;
    out.mu = llt.solve(f.b);
    double logdet = 0.0;
    const auto& l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < f.Q.rows(); ++i) logdet += 2.0 * std::log(l(i, i));
    out.base = std::exp(-0.5 * logdet + kPi * f.b.dot(out.mu) + f.c);
    out.llt = std::move(llt);
    return out;
}

} // namespace

double qe_integral(const QuadExp& f) {
    if (f.dim() == 0) return f.coeff * std::exp(f.c);
    return f.coeff * complete_square(f).base;
}

double qe_integral_bilinear(const QuadExp& f, const Eigen::VectorXd& v1, double a1,
                            const Eigen::VectorXd& v2, double a2) {
    const Completed cs = complete_square(f);
    const double m1 = v1.dot(cs.mu) + a1;
    const double m2 = v2.dot(cs.mu) + a2;
    const double cov = v1.dot(cs.llt.solve(v2)) / (2.0 * kPi);
    return f.coeff * cs.base * (m1 * m2 + cov);
}

double gaussian_integral_exact(const Eigen::MatrixXd& quad, const Eigen::VectorXd& lin, double cnst) {
    if (!is_spd(quad)) throw DefinitenessError("gaussian_integral_exact needs a symmetric PD quad");
    return qe_integral({1.0, quad, lin, cnst});
}

double mixture_integral(const GaussianMixture& f) {
    double s = 0.0;
    for (const auto& t : f.terms()) s += qe_integral(to_quadexp(t));
    return s;
}

namespace {

// Number of weak compositions of p into k parts, saturating at limit + 1.
std::size_t composition_count(std::size_t k, long p, std::size_t limit) {
    // C(p + k - 1, k - 1)
    unsigned long long n = 1;
    for (std::size_t i = 1; i < k; ++i) {
        n = n * (static_cast<unsigned long long>(p) + i) / i;
        if (n > limit) return limit + 1;
    }
    return static_cast<std::size_t>(n);
}

void expand_power(const std::vector<QuadExp>& base, long p, std::size_t idx, long remaining,
                  double multinomial, QuadExp acc, double& total) {
    if (idx + 1 == base.size()) {
        // last factor takes the rest
        const QuadExp& t = base[idx];
        for (long r = 0; r < remaining; ++r) acc = qe_product(acc, t);
        // multinomial coefficient already accounts for this split
        total += multinomial * qe_integral(acc);
        return;
    }
    for (long take = 0; take <= remaining; ++take) {
        QuadExp next = acc;
        for (long r = 0; r < take; ++r) next = qe_product(next, base[idx]);
        // running multinomial: divide by take! incrementally
        double coef = multinomial;
        for (long r = 1; r <= take; ++r) coef *= static_cast<double>(remaining - r + 1) / static_cast<double>(r);
        expand_power(base, p, idx + 1, remaining - take, coef, std::move(next), total);
    }
}

} // namespace

double lp_norm(const GaussianMixture& f, long p) {
    if (p <= 0 || p % 2 != 0)
        throw RouteError("lp_norm supports even positive exponents only; request the Monte Carlo route otherwise");
    if (f.empty()) return 0.0;

    constexpr std::size_t kTermCap = 1'000'000;
    if (composition_count(f.terms().size(), p, kTermCap) > kTermCap)
        throw TermLimitError("L^p expansion exceeds the term cap");

    std::vector<QuadExp> base;
    base.reserve(f.terms().size());
    for (const auto& t : f.terms()) base.push_back(to_quadexp(t));

    QuadExp unit;
    unit.coeff = 1.0;
    unit.Q = Eigen::MatrixXd::Zero(f.dim(), f.dim());
    unit.b = Eigen::VectorXd::Zero(f.dim());
    unit.c = 0.0;

    double total = 0.0;
    expand_power(base, p, 0, p, 1.0, unit, total);
    if (total < 0.0) total = 0.0; // F^p >= 0 pointwise; guard rounding
    return std::pow(total, 1.0 / static_cast<double>(p));
}

long even_integer_exponent(const Rational& p) {
    if (!(p.den() == 1)) throw RouteError("exponent must be an even integer for the exact norm route");
    if (!p.num().fits_slong_p()) throw RouteError("exponent out of range");
    const long v = p.num().get_si();
    if (v <= 0 || v % 2 != 0) throw RouteError("exponent must be an even positive integer");
    return v;
}

const GaussianMixture& FunctionAssignment::at(const CubeIndex& j) const {
    const auto it = functions.find(j);
    if (it == functions.end()) throw IndexError("no function for corner " + j.str());
    return it->second;
}

void FunctionAssignment::validate() const {
    if (symmetry_level > m) throw PreconditionError("symmetry_level must be at most m");
    const auto corners = all_corners(m);
    if (functions.size() != corners.size()) throw ShapeError("expected one function per corner");
    for (const auto& j : corners) {
        const auto& f = at(j);
        if (f.dim() != static_cast<Eigen::Index>(d * m))
            throw ShapeError("function at corner " + j.str() + " has wrong dimension");
        for (std::size_t i = 1; i <= symmetry_level; ++i)
            if (!(f == at(reflect(i, j))))
                throw PreconditionError("tuple not symmetric under reflection of axis " + std::to_string(i));
    }
}

FunctionAssignment FunctionAssignment::uniform(std::size_t m, std::size_t d, const GaussianMixture& f) {
    FunctionAssignment t;
    t.m = m;
    t.d = d;
    t.symmetry_level = m;
    for (const auto& j : all_corners(m)) t.functions.emplace(j, f);
    return t;
}

} // namespace sbl
