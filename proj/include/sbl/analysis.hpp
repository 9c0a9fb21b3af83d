#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sbl/matrix.hpp"
#include "sbl/par.hpp"

namespace sbl {

Eigen::MatrixXd to_eigen(const RationalMatrix& m);
Eigen::VectorXd to_eigen(const RationalVector& v);

// ---- Gaussian identities -------------------------------------------------

enum class IdentityKind { Heat, HeatVector, Convolution };

struct IdentityParams {
    double eta = 1.0;       // Heat
    Eigen::VectorXd xi;     // HeatVector
    double t = 1.0;
    double s1 = 1.0;        // Convolution endpoints
    double s0 = 0.0;
};

/// Absolute residual of the requested identity; t-derivatives by central
/// finite difference with step 1e-5, convolution by adaptive quadrature.
double gaussian_identity_check(IdentityKind kind, const IdentityParams& p);

double heat_identity_residual(double eta, double t);
double heat_vector_identity_residual(const Eigen::VectorXd& xi, double t);
double convolution_identity_residual(double s1, double s0, double t);

// ---- Telescoping scale integral -------------------------------------------

/// Quadrature of sum_{i,k} |dg_k(t xi_i)|^2 prod_{j != i} |g(t xi_j)|^2 dt/t
/// over [t_min, t_max]; xi holds l+1 blocks of dimension d. Must be nonzero.
double telescoping_integral(const Eigen::VectorXd& xi, std::size_t d, double t_min, double t_max);

/// pi (prod_j |g(t_min xi_j)|^2 - prod_j |g(t_max xi_j)|^2), the analytic value.
double telescoping_closed_form(const Eigen::VectorXd& xi, std::size_t d, double t_min, double t_max);

// ---- Multipliers and symbol estimates --------------------------------------

using Multiplier = std::function<double(const Eigen::VectorXd&)>;

Multiplier dirac_multiplier();

/// exp(-2 pi |xi|^2 / T^2) - exp(-2 pi T^2 |xi|^2); identically 0 at T = 1,
/// pointwise 1 as T grows.
double heat_difference_value(double t_param, double norm_sq);
Multiplier heat_difference_multiplier(double t_param);

/// ghat_{i,k1,k2}((I A)^T xi) in closed form: the derivative factors vanish
/// exactly when xi_{i,k1} = 0 or (A^T xi)_{i,k2} = 0. Indices are 1-based.
std::complex<double> deriv_gauss_multiplier(std::size_t i, std::size_t k1, std::size_t k2,
                                            const RationalMatrix& a, std::size_t d,
                                            const Eigen::VectorXd& xi);

/// The multiplier sum_{i<=l+1} sum_k integral ghat_{i,k,k}((I A)^T t xi) dt/t,
/// computed by scale-adapted quadrature.
Multiplier ksigma_multiplier(const RationalMatrix& a, std::size_t d, std::size_t l);

struct SymbolGrid {
    double r_min = 0.5;
    double r_max = 64.0;
    int radii = 12;
    int directions = 24;
    std::uint64_t seed = 0;
};

struct SymbolCheckResult {
    double worst_ratio = 0.0;       // max |d^a Khat| |xi|^{|a|} over grid, |a| <= order_used
    int order_requested = 0;
    int order_used = 0;             // numerical differentiation capped at 4
    double slice_max = 0.0;         // max |Khat| on the slice xi_{>l} = 0 (if l given)
};

/// Finite-difference symbol estimate sweep; step 1e-4 |xi| per coordinate.
SymbolCheckResult cz_symbol_check(const Multiplier& khat, std::size_t dim, int order,
                                  const SymbolGrid& grid,
                                  std::optional<std::size_t> l_blocks = std::nullopt,
                                  std::size_t d = 1, Exec exec = Exec::Parallel);

// ---- Annular profile --------------------------------------------------------

/// integral over scales of 2 pi |t s|^2 exp(-pi |t s|^2) dt/t; analytically 1
/// for every s != 0.
double annular_profile_check(double s);

// ---- Stick search -----------------------------------------------------------

struct StickResult {
    double delta = 0.0;
    std::size_t i = 0;   // block index, l < i <= m
    std::size_t k1 = 0;  // 1..d
    std::size_t k2 = 0;
    double grid_min = 0.0;
};

/// Grid minimum of min(|eta_{i k1}|, |(A^T eta)_{i k2}|) over the stick
/// {(0, r w) : 1/2 <= r <= 1, |w - gamma| <= delta, |w| = 1}.
double stick_grid_min(const RationalMatrix& a, std::size_t d, std::size_t l,
                      const Eigen::VectorXd& gamma, double delta, std::size_t i, std::size_t k1,
                      std::size_t k2, int density, Exec exec = Exec::Parallel);

/// Searches a decreasing delta schedule and all (i, k1, k2) lexicographically;
/// accepts only when the grid minimum clears delta by a Lipschitz safety
/// margin, so the certificate survives refinement of the grid.
StickResult stick_search(const RationalMatrix& a, double eps, std::size_t l,
                         const Eigen::VectorXd& gamma, std::size_t d, int grid_density = 9,
                         Exec exec = Exec::Parallel);

// ---- Cone partition ----------------------------------------------------------

/// Greedy maximal delta/6-separated direction set with smooth normalized
/// weights supported in delta-balls around the centers.
class ConePartition {
public:
    ConePartition(std::size_t dim, double delta);

    const std::vector<Eigen::VectorXd>& centers() const { return centers_; }
    std::size_t size() const { return centers_.size(); }
    double delta() const { return delta_; }

    /// f_gamma at xi (any nonzero vector; only its direction matters).
    double weight(std::size_t idx, const Eigen::VectorXd& xi) const;
    std::vector<double> weights(const Eigen::VectorXd& xi) const;

    double min_pairwise_separation() const;
    /// Distance from direction xi to the nearest center.
    double nearest_center_distance(const Eigen::VectorXd& xi) const;

private:
    double rho(double dist) const;

    std::size_t dim_;
    double delta_;
    std::vector<Eigen::VectorXd> centers_;
};

} // namespace sbl
