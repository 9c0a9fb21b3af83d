#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sbl/matrix.hpp"

namespace sbl {

/// A corner of the cube: a function j : {1..m} -> {0,1}, serialized as a bit
/// string such as "01". Ordered lexicographically on the bits.
class CubeIndex {
public:
    CubeIndex() = default;
    explicit CubeIndex(std::vector<std::uint8_t> bits);
    static CubeIndex from_string(std::string_view s);

    std::size_t m() const { return bits_.size(); }

    /// Value at the 1-based axis i.
    int bit(std::size_t i) const;
    void set_bit(std::size_t i, int v);

    std::string str() const;

    friend bool operator==(const CubeIndex&, const CubeIndex&) = default;
    friend auto operator<=>(const CubeIndex&, const CubeIndex&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// All 2^m corners in lexicographic bit order ("00", "01", "10", "11").
std::vector<CubeIndex> all_corners(std::size_t m);

/// Flips bit i (1-based); an involution. Throws IndexError out of range.
CubeIndex reflect(std::size_t i, const CubeIndex& j);

/// Bitwise complement: the opposite corner.
CubeIndex opposite(const CubeIndex& j);

/// The dm x 2dm selection matrix picking (x_1^{j(1)}, ..., x_m^{j(m)}) out of
/// the doubled variable (x^0, x^1). Exactly one 1 per row.
RationalMatrix corner_projection(std::size_t m, std::size_t d, const CubeIndex& j);

/// Block-sense m x 2m selection (the d = 1 projection).
RationalMatrix corner_projection_block(std::size_t m, const CubeIndex& j);

/// The m x m matrix (B A) Pi_j^T: column i comes from B if j(i) = 0, else
/// from A.
RationalMatrix corner_matrix(const RationalMatrix& b, const RationalMatrix& a, const CubeIndex& j);

} // namespace sbl
