#include "sbl/cube.hpp"

#include "sbl/errors.hpp"

namespace sbl {

CubeIndex::CubeIndex(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw ParseError("cube index bits must be 0 or 1");
}

CubeIndex CubeIndex::from_string(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw ParseError(std::string("bad cube index character '") + c + "'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return CubeIndex(std::move(bits));
}

int CubeIndex::bit(std::size_t i) const {
    if (i < 1 || i > bits_.size()) throw IndexError("cube axis out of range");
    return bits_[i - 1];
}

void CubeIndex::set_bit(std::size_t i, int v) {
    if (i < 1 || i > bits_.size()) throw IndexError("cube axis out of range");
    bits_[i - 1] = static_cast<std::uint8_t>(v ? 1 : 0);
}

std::string CubeIndex::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s += static_cast<char>('0' + b);
    return s;
}

std::vector<CubeIndex> all_corners(std::size_t m) {
    std::vector<CubeIndex> out;
    out.reserve(std::size_t(1) << m);
    for (std::size_t code = 0; code < (std::size_t(1) << m); ++code) {
        std::vector<std::uint8_t> bits(m);
        for (std::size_t i = 0; i < m; ++i)
            bits[i] = static_cast<std::uint8_t>((code >> (m - 1 - i)) & 1);
        out.emplace_back(std::move(bits));
    }
    return out;
}

CubeIndex reflect(std::size_t i, const CubeIndex& j) {
    CubeIndex r = j;
    r.set_bit(i, 1 - j.bit(i));
    return r;
}

CubeIndex opposite(const CubeIndex& j) {
    CubeIndex r = j;
    for (std::size_t i = 1; i <= j.m(); ++i) r.set_bit(i, 1 - j.bit(i));
    return r;
}

RationalMatrix corner_projection(std::size_t m, std::size_t d, const CubeIndex& j) {
    if (j.m() != m) throw ShapeError("cube index length does not match m");
    RationalMatrix p(d * m, 2 * d * m);
    for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t slot = static_cast<std::size_t>(j.bit(i)) * m + (i - 1);
        for (std::size_t k = 0; k < d; ++k)
            p.at((i - 1) * d + k, slot * d + k) = Rational(1);
    }
    return p;
}

RationalMatrix corner_projection_block(std::size_t m, const CubeIndex& j) {
    return corner_projection(m, 1, j);
}

RationalMatrix corner_matrix(const RationalMatrix& b, const RationalMatrix& a, const CubeIndex& j) {
    const std::size_t m = j.m();
    if (b.rows() != m || b.cols() != m || a.rows() != m || a.cols() != m)
        throw ShapeError("corner_matrix expects m x m blocks");
    RationalMatrix r(m, m);
    for (std::size_t col = 1; col <= m; ++col) {
        const RationalMatrix& src = j.bit(col) ? a : b;
        for (std::size_t row = 0; row < m; ++row) r.at(row, col - 1) = src.at(row, col - 1);
    }
    return r;
}

} // namespace sbl
