#include "sbl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sbl/cube.hpp"
#include "sbl/errors.hpp"
#include "sbl/kernels.hpp"
#include "sbl/mc.hpp"
#include "sbl/quadrature.hpp"

namespace sbl {

namespace {
constexpr double kPi = std::numbers::pi;
}

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).to_double();
    return out;
}

Eigen::VectorXd to_eigen(const RationalVector& v) {
    Eigen::VectorXd out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i].to_double();
    return out;
}

// ---- identities ------------------------------------------------------------

double heat_identity_residual(double eta, double t) {
    if (!(t > 0.0) || eta == 0.0) throw PreconditionError("heat identity needs t > 0 and eta != 0");
    const auto sq = [eta](double s) { return std::exp(-2.0 * kPi * s * s * eta * eta); };
    const double h = 1e-5;
    const double lhs = -t * (sq(t + h) - sq(t - h)) / (2.0 * h);
    const double rhs = 4.0 * kPi * t * t * eta * eta * std::exp(-2.0 * kPi * t * t * eta * eta);
    return std::abs(lhs - rhs);
}

double heat_vector_identity_residual(const Eigen::VectorXd& xi, double t) {
    if (!(t > 0.0) || xi.norm() == 0.0)
        throw PreconditionError("heat-vector identity needs t > 0 and xi != 0");
    const double n2 = xi.squaredNorm();
    const auto sq = [n2](double s) { return std::exp(-2.0 * kPi * s * s * n2); };
    const double h = 1e-5;
    const double lhs = -t * (sq(t + h) - sq(t - h)) / (2.0 * h);
    double rhs = 0.0;
    for (Eigen::Index k = 0; k < xi.size(); ++k)
        rhs += 4.0 * kPi * t * t * xi(k) * xi(k) * std::exp(-2.0 * kPi * t * t * n2);
    return std::abs(lhs - rhs);
}

double convolution_identity_residual(double s1, double s0, double t) {
    if (!(t > 0.0)) throw PreconditionError("convolution identity needs t > 0");
    const auto g_scaled = [](double scale, double x) {
        return std::exp(-kPi * x * x / (scale * scale)) / scale;
    };
    const double lhs = g_scaled(std::numbers::sqrt2 * t, s1 - s0);
    const double c = 0.5 * (s0 + s1);
    const double half_width = 8.0 * t + std::abs(s1 - s0);
    const double rhs = adaptive_simpson(
        [&](double p) { return g_scaled(t, s1 - p) * g_scaled(t, s0 - p); }, c - half_width,
        c + half_width, 1e-13);
    return std::abs(lhs - rhs);
}

double gaussian_identity_check(IdentityKind kind, const IdentityParams& p) {
    switch (kind) {
        case IdentityKind::Heat: return heat_identity_residual(p.eta, p.t);
        case IdentityKind::HeatVector: return heat_vector_identity_residual(p.xi, p.t);
        case IdentityKind::Convolution: return convolution_identity_residual(p.s1, p.s0, p.t);
    }
    throw PreconditionError("unknown identity kind");
}

// ---- telescoping -------------------------------------------------------------

double telescoping_integral(const Eigen::VectorXd& xi, std::size_t d, double t_min, double t_max) {
    if (xi.size() == 0 || xi.norm() == 0.0)
        throw PreconditionError("telescoping integral is undefined on the vanishing locus xi = 0");
    if (!(0.0 < t_min && t_min < t_max)) throw PreconditionError("need 0 < t_min < t_max");
    if (xi.size() % static_cast<Eigen::Index>(d) != 0)
        throw ShapeError("xi must consist of blocks of dimension d");
    const std::size_t blocks = static_cast<std::size_t>(xi.size()) / d;

    const auto integrand = [&](double t) {
        // sum_{i,k} |dg_k(t xi_i)|^2 prod_{j != i} |g(t xi_j)|^2, written out
        // literally; the telescoped closed form is what the tests compare to.
        std::vector<double> block_sq(blocks, 0.0);
        for (std::size_t i = 0; i < blocks; ++i) {
            double n2 = 0.0;
            for (std::size_t k = 0; k < d; ++k) n2 += xi(i * d + k) * xi(i * d + k);
            block_sq[i] = std::exp(-2.0 * kPi * t * t * n2);
        }
        double total = 0.0;
        for (std::size_t i = 0; i < blocks; ++i) {
            double rest = 1.0;
            for (std::size_t j = 0; j < blocks; ++j)
                if (j != i) rest *= block_sq[j];
            for (std::size_t k = 0; k < d; ++k) {
                const double c = xi(i * d + k);
                total += 4.0 * kPi * kPi * t * t * c * c * block_sq[i] * rest;
            }
        }
        return total;
    };
    return integrate_log_scale(integrand, t_min, t_max, 64);
}

double telescoping_closed_form(const Eigen::VectorXd& xi, std::size_t d, double t_min, double t_max) {
    (void)d;
    const double n2 = xi.squaredNorm();
    return kPi * (std::exp(-2.0 * kPi * t_min * t_min * n2) - std::exp(-2.0 * kPi * t_max * t_max * n2));
}

// ---- multipliers ---------------------------------------------------------------

Multiplier dirac_multiplier() {
    return [](const Eigen::VectorXd&) { return 1.0; };
}

double heat_difference_value(double t_param, double norm_sq) {
    return std::exp(-2.0 * kPi * norm_sq / (t_param * t_param)) -
           std::exp(-2.0 * kPi * t_param * t_param * norm_sq);
}

Multiplier heat_difference_multiplier(double t_param) {
    if (!(t_param >= 1.0)) throw PreconditionError("heat difference kernel needs T >= 1");
    return [t_param](const Eigen::VectorXd& xi) { return heat_difference_value(t_param, xi.squaredNorm()); };
}

std::complex<double> deriv_gauss_multiplier(std::size_t i, std::size_t k1, std::size_t k2,
                                            const RationalMatrix& a, std::size_t d,
                                            const Eigen::VectorXd& xi) {
    const std::size_t m = a.rows();
    if (!a.square()) throw ShapeError("A must be square");
    if (i < 1 || i > m || k1 < 1 || k1 > d || k2 < 1 || k2 > d)
        throw IndexError("deriv_gauss_multiplier index out of range");
    if (xi.size() != static_cast<Eigen::Index>(d * m)) throw ShapeError("xi must lie in R^{dm}");

    const Eigen::MatrixXd at_block = to_eigen(a.transpose());
    Eigen::VectorXd at_xi = Eigen::VectorXd::Zero(xi.size());
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            const double w = at_block(r, c);
            if (w == 0.0) continue;
            for (std::size_t k = 0; k < d; ++k) at_xi(r * d + k) += w * xi(c * d + k);
        }

    const double za = xi((i - 1) * d + (k1 - 1));
    const double zb = at_xi((i - 1) * d + (k2 - 1));
    const double norm_sq = xi.squaredNorm() + at_xi.squaredNorm();
    const std::complex<double> fa(0.0, 2.0 * kPi * za);
    const std::complex<double> fb(0.0, 2.0 * kPi * zb);
    return fa * fb * std::exp(-kPi * norm_sq);
}

Multiplier ksigma_multiplier(const RationalMatrix& a, std::size_t d, std::size_t l) {
    const std::size_t m = a.rows();
    if (l + 1 > m) throw PreconditionError("ksigma needs l + 1 <= m");
    const Eigen::MatrixXd af = to_eigen(a);
    return [af, d, l, m](const Eigen::VectorXd& xi) {
        if (xi.size() != static_cast<Eigen::Index>(d * m)) throw ShapeError("xi must lie in R^{dm}");
        Eigen::VectorXd at_xi = Eigen::VectorXd::Zero(xi.size());
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                const double w = af(c, r);
                if (w == 0.0) continue;
                for (std::size_t k = 0; k < d; ++k) at_xi(r * d + k) += w * xi(c * d + k);
            }
        const double c2 = xi.squaredNorm() + at_xi.squaredNorm();
        if (c2 == 0.0) return 0.0;
        double s = 0.0;
        for (std::size_t i = 1; i <= l + 1; ++i)
            for (std::size_t k = 1; k <= d; ++k)
                s += xi((i - 1) * d + (k - 1)) * at_xi((i - 1) * d + (k - 1));
        // integral of -4 pi^2 s t^2 exp(-pi c2 t^2) dt/t, quadrature around the
        // natural scale 1/sqrt(c2)
        const double scale = 1.0 / std::sqrt(c2);
        const auto integrand = [&](double t) {
            return -4.0 * kPi * kPi * s * t * t * std::exp(-kPi * c2 * t * t);
        };
        return integrate_log_scale(integrand, scale * 1e-4, scale * 1e4, 64);
    };
}

// ---- symbol check ----------------------------------------------------------------

Multiplier multiplier_of(const KernelSpec& kernel, const RationalMatrix& a, std::size_t d) {
    if (std::holds_alternative<DiracKernel>(kernel)) return dirac_multiplier();
    if (const auto* h = std::get_if<HeatDifferenceKernel>(&kernel))
        return heat_difference_multiplier(h->T);
    const auto& g = std::get<DerivGaussScaleKernel>(kernel);
    if (g.u.size() != 0 && g.u.norm() != 0.0)
        throw RouteError("multiplier sampling needs u = 0 (nonzero shifts are complex-valued)");
    const std::size_t m = a.rows();
    if (g.i < 1 || g.i > m || g.k1 < 1 || g.k1 > d || g.k2 < 1 || g.k2 > d)
        throw IndexError("kernel indices out of range");
    const auto c = g.c;
    const double t_min = g.t_min, t_max = g.t_max;
    const std::size_t i = g.i, k1 = g.k1, k2 = g.k2;
    const RationalMatrix a_copy = a;
    return [=](const Eigen::VectorXd& xi) {
        const auto integrand = [&](double t) {
            return c(t) * deriv_gauss_multiplier(i, k1, k2, a_copy, d,
                                                 Eigen::VectorXd(t * xi))
                              .real();
        };
        return integrate_log_scale(integrand, t_min, t_max, 64);
    };
}

namespace {

struct Stencil {
    std::vector<std::pair<int, double>> taps;   // (offset, coefficient)
};

const Stencil& central_stencil(int order) {
    static const Stencil s0{{{0, 1.0}}};
    static const Stencil s1{{{-1, -0.5}, {1, 0.5}}};
    static const Stencil s2{{{-1, 1.0}, {0, -2.0}, {1, 1.0}}};
    static const Stencil s3{{{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}}};
    static const Stencil s4{{{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}}};
    switch (order) {
        case 0: return s0;
        case 1: return s1;
        case 2: return s2;
        case 3: return s3;
        case 4: return s4;
        default: throw PreconditionError("finite differences capped at order 4");
    }
}

void enumerate_multi_indices(std::size_t dim, int max_total, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(dim, 0);
    // lexicographic enumeration of alpha with |alpha| <= max_total
    const std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos == dim) {
            out.push_back(cur);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            cur[pos] = a;
            rec(pos + 1, left - a);
        }
        cur[pos] = 0;
    };
    rec(0, max_total);
}

double fd_derivative(const Multiplier& khat, const Eigen::VectorXd& xi, const std::vector<int>& alpha,
                     double h) {
    // tensor product of central stencils, one axis at a time
    std::vector<std::pair<Eigen::VectorXd, double>> pts{{xi, 1.0}};
    double scale = 1.0;
    for (std::size_t axis = 0; axis < alpha.size(); ++axis) {
        const int a = alpha[axis];
        if (a == 0) continue;
        const Stencil& st = central_stencil(a);
        scale /= std::pow(h, a);
        std::vector<std::pair<Eigen::VectorXd, double>> next;
        next.reserve(pts.size() * st.taps.size());
        for (const auto& [p, w] : pts)
            for (const auto& [off, c] : st.taps) {
                if (c == 0.0) continue;
                Eigen::VectorXd q = p;
                q(static_cast<Eigen::Index>(axis)) += off * h;
                next.emplace_back(std::move(q), w * c);
            }
        pts = std::move(next);
    }
    double sum = 0.0;
    for (const auto& [p, w] : pts) sum += w * khat(p);
    return sum * scale;
}

std::vector<Eigen::VectorXd> unit_directions(std::size_t dim, int count, std::uint64_t seed) {
    std::vector<Eigen::VectorXd> dirs;
    if (dim == 1) {
        dirs.push_back(Eigen::VectorXd::Constant(1, 1.0));
        dirs.push_back(Eigen::VectorXd::Constant(1, -1.0));
        return dirs;
    }
    for (int i = 0; i < count; ++i) {
        Eigen::VectorXd v(dim);
        for (std::size_t k = 0; k < dim; ++k)
            v(static_cast<Eigen::Index>(k)) =
                counter_normal(seed, static_cast<std::uint64_t>(i) + 1, k);
        const double n = v.norm();
        if (n < 1e-12) continue;
        dirs.push_back(v / n);
    }
    return dirs;
}

} // namespace

SymbolCheckResult cz_symbol_check(const Multiplier& khat, std::size_t dim, int order,
                                  const SymbolGrid& grid, std::optional<std::size_t> l_blocks,
                                  std::size_t d, Exec exec) {
    if (dim == 0) throw PreconditionError("symbol check needs dimension >= 1");
    SymbolCheckResult res;
    res.order_requested = order;
    res.order_used = std::min(order, 4);

    std::vector<std::vector<int>> alphas;
    enumerate_multi_indices(dim, res.order_used, alphas);

    const auto dirs = unit_directions(dim, grid.directions, grid.seed);
    std::vector<double> radii(grid.radii);
    for (int i = 0; i < grid.radii; ++i)
        radii[i] = grid.r_min * std::pow(grid.r_max / grid.r_min,
                                         grid.radii == 1 ? 0.0 : static_cast<double>(i) / (grid.radii - 1));

    const std::size_t npts = dirs.size() * radii.size();
    res.worst_ratio = reduce_max(
        npts,
        [&](std::size_t idx) {
            const Eigen::VectorXd xi = radii[idx % radii.size()] * dirs[idx / radii.size()];
            const double r = xi.norm();
            const double h = 1e-4 * r;
            double worst = 0.0;
            for (const auto& alpha : alphas) {
                int total = 0;
                for (int a : alpha) total += a;
                const double val = std::abs(fd_derivative(khat, xi, alpha, h)) * std::pow(r, total);
                worst = std::max(worst, val);
            }
            return worst;
        },
        exec);

    if (l_blocks) {
        const std::size_t ld = *l_blocks * d;
        if (ld >= dim) throw PreconditionError("degenerate slice requires l d < dim");
        if (ld == 0) {
            // slice is just the origin: excluded (xi != 0), report 0
            res.slice_max = 0.0;
        } else {
            const auto sdirs = unit_directions(ld, grid.directions, grid.seed + 1);
            const std::size_t ns = sdirs.size() * radii.size();
            res.slice_max = reduce_max(
                ns,
                [&](std::size_t idx) {
                    Eigen::VectorXd xi = Eigen::VectorXd::Zero(dim);
                    xi.head(ld) = radii[idx % radii.size()] * sdirs[idx / radii.size()];
                    return std::abs(khat(xi));
                },
                exec);
        }
    }
    return res;
}

// ---- annular profile ----------------------------------------------------------

double annular_profile_check(double s) {
    if (s == 0.0) throw PreconditionError("annular profile undefined at s = 0");
    const double a = std::abs(s);
    const auto integrand = [a](double t) {
        const double v = t * a;
        return 2.0 * kPi * v * v * std::exp(-kPi * v * v);
    };
    return integrate_log_scale(integrand, 1e-6 / a, 1e3 / a, 64);
}

// ---- stick search ----------------------------------------------------------------

namespace {

struct StickGeometry {
    Eigen::VectorXd gamma;  // unit, dimension d (m - l)
    std::size_t d, l, m;
    Eigen::MatrixXd a;      // m x m, float copy
};

double stick_value(const StickGeometry& geo, const Eigen::VectorXd& omega, double r, std::size_t i,
                   std::size_t k1, std::size_t k2) {
    // eta = (0, r omega) in R^{dm}; value = min(|eta_{i k1}|, |(A^T eta)_{i k2}|)
    const std::size_t dm = geo.d * geo.m;
    Eigen::VectorXd eta = Eigen::VectorXd::Zero(dm);
    eta.tail(geo.d * (geo.m - geo.l)) = r * omega;
    double a_comp = 0.0;
    for (std::size_t h = 1; h <= geo.m; ++h)
        a_comp += geo.a(h - 1, i - 1) * eta((h - 1) * geo.d + (k2 - 1));
    const double e_comp = eta((i - 1) * geo.d + (k1 - 1));
    return std::min(std::abs(e_comp), std::abs(a_comp));
}

} // namespace

double stick_grid_min(const RationalMatrix& a, std::size_t d, std::size_t l,
                      const Eigen::VectorXd& gamma, double delta, std::size_t i, std::size_t k1,
                      std::size_t k2, int density, Exec exec) {
    const std::size_t m = a.rows();
    const std::size_t dd = d * (m - l);
    if (gamma.size() != static_cast<Eigen::Index>(dd)) throw ShapeError("gamma dimension mismatch");
    StickGeometry geo{gamma.normalized(), d, l, m, to_eigen(a)};

    const int n_r = std::max(2, density);
    std::vector<double> rs(n_r);
    for (int q = 0; q < n_r; ++q) rs[q] = 0.5 + 0.5 * q / (n_r - 1);

    if (dd == 1) {
        // the unit sphere near gamma is the single point gamma
        return reduce_min(
            rs.size(), [&](std::size_t q) { return stick_value(geo, geo.gamma, rs[q], i, k1, k2); },
            exec);
    }

    const int n_u = std::max(2, density);
    std::size_t cube = 1;
    for (std::size_t q = 0; q < dd; ++q) cube *= static_cast<std::size_t>(n_u);

    return reduce_min(
        cube * rs.size(),
        [&](std::size_t idx) {
            const std::size_t r_idx = idx % rs.size();
            std::size_t code = idx / rs.size();
            Eigen::VectorXd u(dd);
            for (std::size_t q = 0; q < dd; ++q) {
                const std::size_t step = code % n_u;
                code /= n_u;
                u(static_cast<Eigen::Index>(q)) = -delta + 2.0 * delta * step / (n_u - 1);
            }
            Eigen::VectorXd w = geo.gamma + u;
            const double n = w.norm();
            if (n < 1e-9) return 1.0 / 0.0;   // outside the chart
            w /= n;
            if ((w - geo.gamma).norm() > delta) return 1.0 / 0.0;  // outside the stick
            return stick_value(geo, w, rs[r_idx], i, k1, k2);
        },
        exec);
}

StickResult stick_search(const RationalMatrix& a, double eps, std::size_t l,
                         const Eigen::VectorXd& gamma, std::size_t d, int grid_density, Exec exec) {
    const std::size_t m = a.rows();
    if (!a.square() || m == 0) throw ShapeError("A must be square");
    if (l >= m) throw PreconditionError("stick search needs l < m");

    // hypothesis gate: corner determinants above eps, HS norm at most 1/eps
    const RationalMatrix id = RationalMatrix::identity(m);
    for (const auto& j : all_corners(m))
        if (!(std::abs(corner_matrix(id, a, j).det().to_double()) > eps))
            throw PreconditionError("determinant hypothesis fails at corner " + j.str());
    const double hs = std::sqrt(a.hs_norm_sq().to_double());
    if (!(hs <= 1.0 / eps + 1e-12)) throw PreconditionError("Hilbert-Schmidt hypothesis fails");
    for (std::size_t r = 1; r <= l; ++r)
        for (std::size_t c = 1; c <= m; ++c) {
            const Rational want(r == c ? -1 : 0);
            if (!(a.at(r - 1, c - 1) == want))
                throw PreconditionError("first l rows of A must equal those of -I");
        }

    const std::size_t dd = d * (m - l);
    if (gamma.size() != static_cast<Eigen::Index>(dd)) throw ShapeError("gamma dimension mismatch");
    if (gamma.norm() == 0.0) throw PreconditionError("gamma must be a nonzero direction");

    const double lip = std::max(1.0, hs);
    for (double delta = 0.45; delta >= 1e-6; delta *= 2.0 / 3.0) {
        // covering radius of the sampling grid, and the value deviation it allows
        const double h_r = 0.5 / (std::max(2, grid_density) - 1);
        double dev = lip * 0.5 * h_r;
        if (dd > 1) {
            const double h_u = 2.0 * delta / (std::max(2, grid_density) - 1);
            dev += lip / (1.0 - delta) * 0.5 * h_u * std::sqrt(static_cast<double>(dd));
        }
        for (std::size_t i = l + 1; i <= m; ++i)
            for (std::size_t k1 = 1; k1 <= d; ++k1)
                for (std::size_t k2 = 1; k2 <= d; ++k2) {
                    const double v = stick_grid_min(a, d, l, gamma, delta, i, k1, k2, grid_density, exec);
                    if (std::isfinite(v) && v > delta + dev) return {delta, i, k1, k2, v};
                }
    }
    throw SearchFailureError("no stick certificate above the delta floor; hypothesis suspect");
}

// ---- cone partition ----------------------------------------------------------------

ConePartition::ConePartition(std::size_t dim, double delta) : dim_(dim), delta_(delta) {
    if (!(delta > 0.0)) throw PreconditionError("cone partition needs delta > 0");
    if (dim < 1) throw PreconditionError("cone partition needs dim >= 1");

    if (dim == 1) {
        centers_.push_back(Eigen::VectorXd::Constant(1, 1.0));
        centers_.push_back(Eigen::VectorXd::Constant(1, -1.0));
        return;
    }

    const double sep = delta / 6.0;
    std::vector<Eigen::VectorXd> candidates;
    if (dim == 2) {
        // angular net finer than sep/2 guarantees maximal-up-to-net packing
        const int n = std::max(8, static_cast<int>(std::ceil(4.0 * kPi / sep)));
        candidates.reserve(n);
        for (int k = 0; k < n; ++k) {
            const double th = 2.0 * kPi * k / n;
            Eigen::VectorXd v(2);
            v << std::cos(th), std::sin(th);
            candidates.push_back(std::move(v));
        }
    } else {
        const double per_axis = 24.0 / delta;
        double want = 20.0;
        for (std::size_t q = 0; q + 1 < dim; ++q) want *= per_axis;
        const std::size_t n = static_cast<std::size_t>(std::min(want, 400000.0));
        candidates.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            Eigen::VectorXd v(dim);
            for (std::size_t q = 0; q < dim; ++q)
                v(static_cast<Eigen::Index>(q)) = counter_normal(7, k + 1, q);
            const double nn = v.norm();
            if (nn > 1e-12) candidates.push_back(v / nn);
        }
    }

    for (const auto& c : candidates) {
        bool ok = true;
        for (const auto& g : centers_)
            if ((c - g).norm() < sep) {
                ok = false;
                break;
            }
        if (ok) centers_.push_back(c);
    }
}

double ConePartition::rho(double dist) const {
    if (dist <= delta_ / 2.0) return 1.0;
    if (dist >= delta_) return 0.0;
    // smooth transition on (delta/2, delta)
    const double x = (delta_ - dist) / (delta_ / 2.0);
    const auto bump = [](double v) { return v > 0.0 ? std::exp(-1.0 / v) : 0.0; };
    return bump(x) / (bump(x) + bump(1.0 - x));
}

double ConePartition::weight(std::size_t idx, const Eigen::VectorXd& xi) const {
    const double n = xi.norm();
    if (n == 0.0) throw PreconditionError("cone weights undefined on the degenerate subspace");
    const Eigen::VectorXd w = xi / n;
    double total = 0.0, mine = 0.0;
    for (std::size_t g = 0; g < centers_.size(); ++g) {
        const double r = rho((w - centers_[g]).norm());
        total += r;
        if (g == idx) mine = r;
    }
    if (total == 0.0) throw SearchFailureError("direction not covered by the partition");
    return mine / total;
}

std::vector<double> ConePartition::weights(const Eigen::VectorXd& xi) const {
    const double n = xi.norm();
    if (n == 0.0) throw PreconditionError("cone weights undefined on the degenerate subspace");
    const Eigen::VectorXd w = xi / n;
    std::vector<double> rhos(centers_.size());
    double total = 0.0;
    for (std::size_t g = 0; g < centers_.size(); ++g) {
        rhos[g] = rho((w - centers_[g]).norm());
        total += rhos[g];
    }
    if (total == 0.0) throw SearchFailureError("direction not covered by the partition");
    for (auto& r : rhos) r /= total;
    return rhos;
}

double ConePartition::min_pairwise_separation() const {
    double best = 1.0 / 0.0;
    for (std::size_t i = 0; i < centers_.size(); ++i)
        for (std::size_t j = i + 1; j < centers_.size(); ++j)
            best = std::min(best, (centers_[i] - centers_[j]).norm());
    return best;
}

double ConePartition::nearest_center_distance(const Eigen::VectorXd& xi) const {
    const Eigen::VectorXd w = xi / xi.norm();
    double best = 1.0 / 0.0;
    for (const auto& g : centers_) best = std::min(best, (w - g).norm());
    return best;
}

} // namespace sbl
