#include <doctest.h>

#include "oracles.hpp"
#include "sbl/cube.hpp"
#include "sbl/errors.hpp"

using namespace sbl;

TEST_CASE("corner projections: stated examples") {
    CHECK(corner_projection(2, 1, CubeIndex::from_string("00")) ==
          RationalMatrix::parse("1 0 0 0; 0 1 0 0"));
    CHECK(corner_projection(2, 1, CubeIndex::from_string("01")) ==
          RationalMatrix::parse("1 0 0 0; 0 0 0 1"));
    CHECK(corner_projection(1, 2, CubeIndex::from_string("1")) ==
          RationalMatrix::parse("0 0 1 0; 0 0 0 1"));
    CHECK_THROWS_AS(corner_projection(2, 1, CubeIndex::from_string("011")), ShapeError);
}

TEST_CASE("every row of a corner projection selects exactly one coordinate") {
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t d = 1; d <= 2; ++d)
            for (const auto& j : all_corners(m)) {
                const RationalMatrix p = corner_projection(m, d, j);
                CHECK(p.rows() == d * m);
                CHECK(p.cols() == 2 * d * m);
                for (std::size_t r = 0; r < p.rows(); ++r) {
                    std::size_t ones = 0, nonzero = 0;
                    for (std::size_t c = 0; c < p.cols(); ++c) {
                        if (!p.at(r, c).is_zero()) ++nonzero;
                        if (p.at(r, c) == Rational(1)) ++ones;
                    }
                    CHECK(ones == 1);
                    CHECK(nonzero == 1);
                }
            }
}

TEST_CASE("reflection: stated examples and involution") {
    CHECK(reflect(1, CubeIndex::from_string("00")) == CubeIndex::from_string("10"));
    CHECK(reflect(2, CubeIndex::from_string("01")) == CubeIndex::from_string("00"));
    CHECK_THROWS_AS(reflect(3, CubeIndex::from_string("01")), IndexError);
    CHECK_THROWS_AS(reflect(0, CubeIndex::from_string("01")), IndexError);

    for (std::size_t m = 1; m <= 4; ++m)
        for (const auto& j : all_corners(m))
            for (std::size_t i = 1; i <= m; ++i) CHECK(reflect(i, reflect(i, j)) == j);
}

TEST_CASE("opposite corner") {
    CHECK(opposite(CubeIndex::from_string("00")) == CubeIndex::from_string("11"));
    CHECK(opposite(CubeIndex::from_string("01")) == CubeIndex::from_string("10"));
}

TEST_CASE("range of Pi_j^T equals the kernel of the opposite projection") {
    for (std::size_t m = 1; m <= 3; ++m)
        for (const auto& j : all_corners(m)) {
            const RationalMatrix pt = corner_projection(m, 1, j).transpose();
            std::vector<RationalVector> range_cols;
            for (std::size_t c = 0; c < pt.cols(); ++c) {
                RationalVector v(pt.rows());
                for (std::size_t r = 0; r < pt.rows(); ++r) v[r] = pt.at(r, c);
                range_cols.push_back(std::move(v));
            }
            const auto kernel = corner_projection(m, 1, opposite(j)).kernel_basis();
            CHECK(same_span(range_cols, kernel));
        }
}

TEST_CASE("corner projections have full row rank and orthonormal rows") {
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t d = 1; d <= 2; ++d)
            for (const auto& j : all_corners(m)) {
                const RationalMatrix p = corner_projection(m, d, j);
                CHECK(p.rank() == d * m);
                CHECK(p * p.transpose() == RationalMatrix::identity(d * m));
            }
}

TEST_CASE("diagonal matrices commute through the projections: D Pi_j = Pi_j D~") {
    for (std::uint64_t trial = 0; trial < 12; ++trial) {
        const std::size_t m = 1 + trial % 3, d = 1 + trial % 2;
        RationalVector diag(m);
        for (std::size_t i = 0; i < m; ++i) diag[i] = oracle::random_rational(41, trial, i);
        const RationalMatrix dm = RationalMatrix::diagonal(diag).block_expand(d);
        RationalVector doubled(2 * m);
        for (std::size_t i = 0; i < m; ++i) doubled[i] = doubled[m + i] = diag[i];
        const RationalMatrix dtilde = RationalMatrix::diagonal(doubled).block_expand(d);
        for (const auto& j : all_corners(m)) {
            const RationalMatrix p = corner_projection(m, d, j);
            CHECK(dm * p == p * dtilde);
        }
    }
}

TEST_CASE("corner matrix mixes columns of B and A") {
    const RationalMatrix b = RationalMatrix::parse("1 2; 3 4");
    const RationalMatrix a = RationalMatrix::parse("5 6; 7 8");
    CHECK(corner_matrix(b, a, CubeIndex::from_string("00")) == b);
    CHECK(corner_matrix(b, a, CubeIndex::from_string("11")) == a);
    CHECK(corner_matrix(b, a, CubeIndex::from_string("10")) == RationalMatrix::parse("5 2; 7 4"));
    CHECK(corner_matrix(b, a, CubeIndex::from_string("01")) == RationalMatrix::parse("1 6; 3 8"));
}

TEST_CASE("cube index order and serialization") {
    const auto corners = all_corners(2);
    REQUIRE(corners.size() == 4);
    CHECK(corners[0].str() == "00");
    CHECK(corners[1].str() == "01");
    CHECK(corners[2].str() == "10");
    CHECK(corners[3].str() == "11");
    CHECK(CubeIndex::from_string("0110").str() == "0110");
    CHECK_THROWS_AS(CubeIndex::from_string("0x1"), ParseError);
}
