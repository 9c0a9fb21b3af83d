#include <doctest.h>

#include "oracles.hpp"
#include "sbl/cube.hpp"
#include "sbl/errors.hpp"
#include "sbl/matrix.hpp"
#include "sbl/rational.hpp"

using namespace sbl;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::from_string("3/6") == Rational(1, 2));
    CHECK(Rational::from_string("-4/8") == Rational(-1, 2));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string(" -7 ") == Rational(-7));
    CHECK(Rational::from_string("+7") == Rational(7));
    CHECK(Rational::from_string("+3/+6") == Rational(1, 2));
    CHECK(Rational::from_string("007") == Rational(7));

    const Rational r(6, -8);
    CHECK(r.den() > 0);           // positive denominator
    CHECK(r == Rational(-3, 4));  // lowest terms

    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("a/2"), ParseError);
    CHECK_THROWS_AS(Rational::from_string(""), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
}

TEST_CASE("rational arithmetic and powers") {
    const Rational a(2, 3), b(-5, 7);
    CHECK(a + b == Rational(-1, 21));
    CHECK(a * b == Rational(-10, 21));
    CHECK(a / b == Rational(-14, 15));
    CHECK(a.pow(3) == Rational(8, 27));
    CHECK(a.pow(-2) == Rational(9, 4));
    CHECK(Rational(1, 2).reciprocal() == Rational(2));
    CHECK_THROWS_AS(Rational(0).reciprocal(), SingularMatrixError);
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(b < a);
}

TEST_CASE("determinant: stated examples") {
    CHECK(RationalMatrix::identity(3).det() == Rational(1));
    CHECK(RationalMatrix::parse("1 2; 3 4").det() == Rational(-2));
}

TEST_CASE("determinant of every corner matrix for A = -I, m = 2, via cofactor oracle") {
    const std::size_t m = 2;
    const RationalMatrix id = RationalMatrix::identity(m);
    const RationalMatrix a = id.scaled(Rational(-1));
    for (const auto& j : all_corners(m)) {
        const RationalMatrix cm = corner_matrix(id, a, j);
        const Rational expected = oracle::cofactor_det(cm);
        CHECK(cm.det() == expected);
        CHECK(cm.det().abs() == Rational(1));
    }
}

TEST_CASE("determinant is multiplicative on random pairs") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const RationalMatrix a = oracle::random_matrix(11, 2 * trial, n, n);
        const RationalMatrix b = oracle::random_matrix(11, 2 * trial + 1, n, n);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("determinant agrees with the cofactor oracle on random matrices") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const RationalMatrix a = oracle::random_matrix(13, trial, n, n);
        CHECK(a.det() == oracle::cofactor_det(a));
    }
}

TEST_CASE("kernel basis: stated examples") {
    const RationalMatrix m1 = RationalMatrix::parse("1 -1");
    const auto k1 = m1.kernel_basis();
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == RationalVector{Rational(1), Rational(1)});

    const RationalMatrix m2 = RationalMatrix::parse("1 0");
    const auto k2 = m2.kernel_basis();
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == RationalVector{Rational(0), Rational(1)});
}

TEST_CASE("kernel basis of a random wide matrix: membership, count, independence") {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        RationalMatrix m = oracle::random_matrix(17, trial, 3, 6);
        if (oracle::minor_rank(m) != 3) continue;   // want full row rank samples
        const auto basis = m.kernel_basis();
        CHECK(basis.size() == 3);
        for (const auto& v : basis) {
            const RationalVector image = m * v;
            for (const auto& x : image) CHECK(x.is_zero());
        }
        // independence through the minor-rank oracle
        CHECK(oracle::minor_rank(basis_matrix(basis)) == basis.size());
    }
}

TEST_CASE("rank-nullity on random matrices") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 4, c = 1 + (trial / 2) % 6;
        const RationalMatrix m = oracle::random_matrix(19, trial, r, c);
        CHECK(m.rank() + m.kernel_basis().size() == m.cols());
        CHECK(m.rank() == oracle::minor_rank(m));
    }
}

TEST_CASE("inverse: stated examples and multiply-back") {
    CHECK(RationalMatrix::identity(3).inverse() == RationalMatrix::identity(3));
    const RationalMatrix d = RationalMatrix::parse("2 0; 0 4");
    CHECK(d.inverse() == RationalMatrix::parse("1/2 0; 0 1/4"));

    const RationalMatrix r = oracle::random_regular_matrix(23, 4);
    CHECK(r * r.inverse() == RationalMatrix::identity(4));
    CHECK(r.inverse() * r == RationalMatrix::identity(4));

    RationalMatrix sing(2, 2);
    sing.at(0, 0) = Rational(1);
    sing.at(1, 0) = Rational(2);
    CHECK_THROWS_WITH_AS(static_cast<void>(sing.inverse()), "matrix is singular (det = 0)",
                         SingularMatrixError);
}

TEST_CASE("hs_norm_sq: examples and zeroing monotonicity") {
    for (std::size_t m = 1; m <= 4; ++m)
        CHECK(RationalMatrix::identity(m).hs_norm_sq() == Rational(static_cast<long>(m)));
    CHECK(RationalMatrix::parse("1 2; 3 4").hs_norm_sq() == Rational(30));

    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        RationalMatrix m = oracle::random_matrix(29, trial, 3, 3);
        const Rational before = m.hs_norm_sq();
        const std::size_t which = trial % 9;
        m.at(which / 3, which % 3) = Rational(0);
        CHECK(m.hs_norm_sq() <= before);
    }
}

TEST_CASE("Kronecker action consistency") {
    for (std::uint64_t trial = 0; trial < 15; ++trial) {
        const std::size_t m = 2 + trial % 2, d = 1 + trial % 3;
        const RationalMatrix a = oracle::random_matrix(31, 2 * trial, m, m);
        RationalVector y(m * d);
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = oracle::random_rational(31, 2 * trial + 1, i);

        const RationalVector via_blocks = kron_apply(a, y, d);
        const RationalVector via_expand = a.block_expand(d) * y;
        CHECK(via_blocks == via_expand);

        // blockwise definition: (A y)_i = sum_j a_ij y_j
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                Rational s(0);
                for (std::size_t j = 0; j < m; ++j) s += a.at(i, j) * y[j * d + k];
                CHECK(via_blocks[i * d + k] == s);
            }
    }
}

TEST_CASE("matrix text form round-trips exactly") {
    const char* text = "1/2 -3; 0 7/5";
    const RationalMatrix m = RationalMatrix::parse(text);
    CHECK(m.str() == "1/2 -3; 0 7/5");
    CHECK(RationalMatrix::parse(m.str()) == m);

    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        const RationalMatrix r = oracle::random_matrix(37, trial, 1 + trial % 3, 1 + (trial / 3) % 4, 9, 7);
        CHECK(RationalMatrix::parse(r.str()) == r);
    }

    CHECK_THROWS_AS(RationalMatrix::parse("1 2; 3"), ParseError);
    CHECK_THROWS_AS(RationalMatrix::parse(""), ParseError);
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(static_cast<void>(RationalMatrix::parse("1 2; 3 4; 5 6").det()), ShapeError);
    CHECK_THROWS_AS(static_cast<void>(RationalMatrix(2, 3) * RationalMatrix(2, 3)), ShapeError);
    CHECK_THROWS_AS(RationalMatrix(2, 2, std::vector<Rational>(3)), ShapeError);
}
