#include "sbl/instance.hpp"

#include <sstream>

#include "sbl/errors.hpp"

namespace sbl {

CubicalData CubicalData::make(std::size_t m, std::size_t d, RationalMatrix b, RationalMatrix a) {
    CubicalData data;
    data.m = m;
    data.d = d;
    data.B = std::move(b);
    data.A = std::move(a);
    const Rational p(static_cast<long>(1) << m);
    for (const auto& j : all_corners(m)) data.exponents.emplace(j, p);
    data.validate();
    return data;
}

RationalMatrix CubicalData::pi_block() const { return RationalMatrix::hconcat(B, A); }

RationalMatrix CubicalData::pi_scalar() const { return pi_block().block_expand(d); }

Rational CubicalData::exponent(const CubeIndex& j) const {
    const auto it = exponents.find(j);
    if (it == exponents.end()) throw IndexError("no exponent for corner " + j.str());
    return it->second;
}

bool CubicalData::exponents_sum_to_one() const {
    Rational s(0);
    for (const auto& [j, p] : exponents) s += p.reciprocal();
    return s == Rational(1);
}

void CubicalData::validate() const {
    if (m < 1 || d < 1) throw PreconditionError("m and d must be at least 1");
    if (B.rows() != m || B.cols() != m) throw ShapeError("B must be m x m");
    if (A.rows() != m || A.cols() != m) throw ShapeError("A must be m x m");
    if (exponents.size() != (std::size_t(1) << m))
        throw ShapeError("expected one exponent per corner");
    for (const auto& [j, p] : exponents) {
        if (j.m() != m) throw ShapeError("exponent key of wrong length: " + j.str());
        if (p.sign() <= 0) throw PreconditionError("exponent must be positive at corner " + j.str());
    }
}

std::string CubicalData::serialize() const {
    std::ostringstream os;
    os << "m = " << m << "\n";
    os << "d = " << d << "\n";
    os << "B = " << B.str() << "\n";
    os << "A = " << A.str() << "\n";
    for (const auto& [j, p] : exponents) os << "p " << j.str() << " = " << p.str() << "\n";
    return os.str();
}

CubicalData CubicalData::parse(std::string_view text) {
    CubicalData data;
    bool saw_m = false, saw_d = false, saw_a = false, saw_b = false;
    std::map<CubeIndex, Rational> exps;

    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;

        auto rest_after_eq = [&]() {
            std::string eq;
            ls >> eq;
            if (eq != "=") throw ParseError("expected '=' after '" + key + "'");
            std::string rest;
            std::getline(ls, rest);
            return rest;
        };

        if (key == "m") {
            data.m = static_cast<std::size_t>(std::stoul(rest_after_eq()));
            saw_m = true;
        } else if (key == "d") {
            data.d = static_cast<std::size_t>(std::stoul(rest_after_eq()));
            saw_d = true;
        } else if (key == "B") {
            data.B = RationalMatrix::parse(rest_after_eq());
            saw_b = true;
        } else if (key == "A") {
            data.A = RationalMatrix::parse(rest_after_eq());
            saw_a = true;
        } else if (key == "p") {
            std::string corner;
            ls >> corner;
            std::string eq;
            ls >> eq;
            if (eq != "=") throw ParseError("expected '=' after corner in exponent line");
            std::string val;
            ls >> val;
            exps.emplace(CubeIndex::from_string(corner), Rational::from_string(val));
        } else {
            throw ParseError("unknown instance key '" + key + "'");
        }
    }

    if (!saw_m) throw ParseError("instance missing field m");
    if (!saw_d) throw ParseError("instance missing field d");
    if (!saw_a) throw ParseError("instance missing field A");
    if (!saw_b) data.B = RationalMatrix::identity(data.m);

    if (exps.empty()) {
        const Rational p(static_cast<long>(1) << data.m);
        for (const auto& j : all_corners(data.m)) exps.emplace(j, p);
    }
    data.exponents = std::move(exps);
    data.validate();
    return data;
}

} // namespace sbl
