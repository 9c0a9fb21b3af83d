#include "sbl/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "sbl/errors.hpp"

namespace sbl {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw ShapeError("entry count " + std::to_string(e_.size()) + " does not match " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& d) {
    RationalMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols) {
    if (cols.empty()) return RationalMatrix();
    const std::size_t n = cols[0].size();
    RationalMatrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != n) throw ShapeError("ragged column list");
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RationalMatrix RationalMatrix::parse(std::string_view text) {
    std::vector<std::vector<Rational>> rows;
    std::string row_text;
    std::stringstream all{std::string(text)};
    while (std::getline(all, row_text, ';')) {
        std::stringstream rs(row_text);
        std::string tok;
        std::vector<Rational> row;
        while (rs >> tok) row.push_back(Rational::from_string(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix literal");
    const std::size_t nc = rows[0].size();
    std::vector<Rational> entries;
    for (const auto& r : rows) {
        if (r.size() != nc) throw ParseError("ragged matrix literal");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return RationalMatrix(rows.size(), nc, std::move(entries));
}

std::string RationalMatrix::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += " ";
            out += at(i, j).str();
        }
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
    RationalVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    RationalMatrix r(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw IndexError("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    }
    return r;
}

RationalMatrix RationalMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw IndexError("submatrix out of range");
    RationalMatrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& left, const RationalMatrix& right) {
    if (left.rows() != right.rows()) throw ShapeError("hconcat row mismatch");
    RationalMatrix r(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) r.at(i, j) = left.at(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) r.at(i, left.cols() + j) = right.at(i, j);
    }
    return r;
}

Rational RationalMatrix::det() const {
    if (!square()) throw ShapeError("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return Rational(1);

    // Clear denominators row by row so the elimination runs over integers.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = at(i, j);
            m[i][j] = q.num() * (l / q.den());
        }
        scale *= Rational(mpq_class(l));
    }

    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Rational d{mpq_class(sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]))};
    return d / scale;
}

namespace {

struct Echelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

Echelon rref(const RationalMatrix& in) {
    RationalMatrix m = in;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && m.at(piv, col).is_zero()) ++piv;
        if (piv == nr) continue;
        if (piv != row)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(piv, j), m.at(row, j));
        const Rational inv = m.at(row, col).reciprocal();
        for (std::size_t j = col; j < nc; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < nc; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace

std::size_t RationalMatrix::rank() const { return rref(*this).pivot_cols.size(); }

std::vector<RationalVector> RationalMatrix::kernel_basis() const {
    const Echelon ech = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalVector v(cols_);
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
            v[ech.pivot_cols[r]] = -ech.reduced.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix RationalMatrix::inverse() const {
    if (!square()) throw ShapeError("inverse of non-square matrix");
    const Echelon ech = rref(hconcat(*this, identity(rows_)));
    if (ech.pivot_cols.size() < rows_ ||
        (rows_ > 0 && ech.pivot_cols[rows_ - 1] >= rows_))
        throw SingularMatrixError("matrix is singular (det = 0)");
    return ech.reduced.submatrix(0, cols_, rows_, cols_);
}

Rational RationalMatrix::hs_norm_sq() const {
    Rational s(0);
    for (const auto& x : e_) s += x * x;
    return s;
}

RationalMatrix RationalMatrix::block_expand(std::size_t d) const {
    RationalMatrix r(rows_ * d, cols_ * d);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k) r.at(i * d + k, j * d + k) = at(i, j);
        }
    return r;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
}

RationalVector kron_apply(const RationalMatrix& a, const RationalVector& y, std::size_t d) {
    if (y.size() != a.cols() * d) throw ShapeError("kron_apply shape mismatch");
    RationalVector r(a.rows() * d);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k) r[i * d + k] += a.at(i, j) * y[j * d + k];
        }
    return r;
}

RationalMatrix basis_matrix(const std::vector<RationalVector>& basis) {
    return RationalMatrix::from_columns(basis);
}

bool same_span(const std::vector<RationalVector>& u, const std::vector<RationalVector>& v) {
    if (u.empty() || v.empty()) return u.empty() && v.empty();
    const RationalMatrix mu = basis_matrix(u), mv = basis_matrix(v);
    if (mu.rows() != mv.rows()) return false;
    const std::size_t ru = mu.rank(), rv = mv.rank();
    return ru == rv && RationalMatrix::hconcat(mu, mv).rank() == ru;
}

} // namespace sbl
