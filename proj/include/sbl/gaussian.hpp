#pragma once

#include <Eigen/Dense>

#include <map>
#include <vector>

#include "sbl/cube.hpp"
#include "sbl/rational.hpp"

namespace sbl {

/// One term c * exp(-pi (x-mu)' M (x-mu)) with M symmetric positive definite.
struct GaussianTerm {
    double coeff = 0.0;
    Eigen::VectorXd center;
    Eigen::MatrixXd quad;
};

/// Finite signed sum of Gaussian terms. Closed under products, affine
/// pullbacks and integration; the exact-evaluation function class.
class GaussianMixture {
public:
    GaussianMixture() : dim_(0) {}
    explicit GaussianMixture(Eigen::Index dim) : dim_(dim) {}

    /// exp(-pi |x|^2) on R^dim.
    static GaussianMixture standard(Eigen::Index dim);
    static GaussianMixture single(double coeff, Eigen::VectorXd center, Eigen::MatrixXd quad);

    /// Validates dimensions, symmetry and positive definiteness (Cholesky).
    void add_term(double coeff, Eigen::VectorXd center, Eigen::MatrixXd quad);

    Eigen::Index dim() const { return dim_; }
    const std::vector<GaussianTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    double value(const Eigen::VectorXd& x) const;
    GaussianMixture scaled(double c) const;

    friend bool operator==(const GaussianMixture& a, const GaussianMixture& b);

private:
    Eigen::Index dim_;
    std::vector<GaussianTerm> terms_;
};

/// coeff * exp(-pi x'Qx + 2 pi b'x + c); Q only required symmetric PSD until
/// integration. The working representation for all exact form evaluation.
struct QuadExp {
    double coeff = 1.0;
    Eigen::MatrixXd Q;
    Eigen::VectorXd b;
    double c = 0.0;

    Eigen::Index dim() const { return Q.rows(); }
    double value(const Eigen::VectorXd& x) const;
};

QuadExp to_quadexp(const GaussianTerm& t);
QuadExp qe_product(const QuadExp& f, const QuadExp& g);
/// Composition z -> f(Lz + a).
QuadExp qe_pullback(const QuadExp& f, const Eigen::MatrixXd& L, const Eigen::VectorXd& a);

/// Exact integral over R^dim; throws DefinitenessError when Q is not PD.
double qe_integral(const QuadExp& f);

/// Exact integral of (v1.x + a1)(v2.x + a2) * f(x).
double qe_integral_bilinear(const QuadExp& f, const Eigen::VectorXd& v1, double a1,
                            const Eigen::VectorXd& v2, double a2);

/// integral exp(-pi x'Qx + 2 pi lin.x + cnst) dx = det(Q)^{-1/2} exp(pi lin'Q^{-1}lin + cnst).
double gaussian_integral_exact(const Eigen::MatrixXd& quad, const Eigen::VectorXd& lin, double cnst);

/// Integral of the mixture itself.
double mixture_integral(const GaussianMixture& f);

/// L^p norm for even positive p via multinomial expansion of F^p.
/// Throws RouteError for odd or nonpositive p, TermLimitError past 10^6 terms.
double lp_norm(const GaussianMixture& f, long p);

/// The exponent as an even positive machine integer; RouteError otherwise.
long even_integer_exponent(const Rational& p);

/// Tuple of functions indexed by cube corners. If symmetry_level = l, then
/// functions[j] and functions[i*j] are identical descriptions for all i <= l.
struct FunctionAssignment {
    std::size_t m = 1;
    std::size_t d = 1;
    std::map<CubeIndex, GaussianMixture> functions;
    std::size_t symmetry_level = 0;

    const GaussianMixture& at(const CubeIndex& j) const;
    void validate() const;

    /// Every corner gets its own copy of f.
    static FunctionAssignment uniform(std::size_t m, std::size_t d, const GaussianMixture& f);
};

} // namespace sbl
