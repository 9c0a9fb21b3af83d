#pragma once

#include <map>
#include <string>
#include <string_view>

#include "sbl/cube.hpp"
#include "sbl/matrix.hpp"
#include "sbl/rational.hpp"

namespace sbl {

/// One cubical instance: dimensions, the two m x m blocks of Pi = (B A), and
/// exponents per corner (default all 2^m, which sum to 1 in reciprocals).
struct CubicalData {
    std::size_t m = 1;
    std::size_t d = 1;
    RationalMatrix B;
    RationalMatrix A;
    std::map<CubeIndex, Rational> exponents;

    static CubicalData make(std::size_t m, std::size_t d, RationalMatrix b, RationalMatrix a);

    /// The m x 2m block matrix (B A).
    RationalMatrix pi_block() const;
    /// The dm x 2dm scalar matrix of Pi.
    RationalMatrix pi_scalar() const;

    Rational exponent(const CubeIndex& j) const;
    bool exponents_sum_to_one() const;

    void validate() const;

    /// Human-editable key/value text with exact rational literals.
    std::string serialize() const;
    static CubicalData parse(std::string_view text);
};

} // namespace sbl
