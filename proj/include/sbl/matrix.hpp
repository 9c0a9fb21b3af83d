#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sbl/rational.hpp"

namespace sbl {

/// Dense exact rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols) { return RationalMatrix(rows, cols); }
    static RationalMatrix diagonal(const RationalVector& d);
    static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

    /// Parses "a b; c d" with entries "p/q" or integers.
    static RationalMatrix parse(std::string_view text);
    std::string str() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalVector operator*(const RationalVector& v) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    /// Columns of this matrix listed in `idx` order.
    RationalMatrix select_columns(const std::vector<std::size_t>& idx) const;
    RationalMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    static RationalMatrix hconcat(const RationalMatrix& left, const RationalMatrix& right);

    /// Exact determinant by fraction-free (Bareiss) elimination on the
    /// denominator-cleared integer matrix. Throws ShapeError if not square.
    Rational det() const;

    /// Rank via exact Gauss-Jordan.
    std::size_t rank() const;

    /// Basis of the null space in reduced-echelon parametrization, free
    /// columns taken in ascending order. Empty iff the matrix is injective.
    std::vector<RationalVector> kernel_basis() const;

    /// Exact inverse; throws SingularMatrixError naming det = 0.
    RationalMatrix inverse() const;

    /// Sum of squared entries (the squared Hilbert-Schmidt norm).
    Rational hs_norm_sq() const;

    /// The matrix with every entry a replaced by the d x d block a*I
    /// (the Kronecker product with the identity of size d).
    RationalMatrix block_expand(std::size_t d) const;

    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

/// Blockwise action of an m x m matrix on a vector of m stacked d-vectors:
/// (A y)_i = sum_j a_ij y_j. Equals block_expand(d) * y.
RationalVector kron_apply(const RationalMatrix& a, const RationalVector& y, std::size_t d);

/// True iff the two column spans are equal (exact).
bool same_span(const std::vector<RationalVector>& u, const std::vector<RationalVector>& v);

RationalMatrix basis_matrix(const std::vector<RationalVector>& basis);

} // namespace sbl
