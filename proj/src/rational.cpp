#include "sbl/rational.hpp"

#include <cctype>
#include <ostream>

#include "sbl/errors.hpp"

namespace sbl {

Rational::Rational(long n, long d) {
    if (d == 0) throw ParseError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    // Trim surrounding whitespace; GMP accepts "p/q" directly but we want
    // strict validation with a named error.
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    const std::string t(s.substr(b, e - b));
    if (t.empty()) throw ParseError("empty rational literal");

    // accept an optional leading '+', which GMP's string parser does not
    auto clean = [](std::string u) -> std::string {
        if (u.empty()) return u;
        size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
        if (i == u.size()) return {};
        for (size_t k = i; k < u.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(u[k]))) return {};
        return u[0] == '+' ? u.substr(1) : u;
    };

    const auto slash = t.find('/');
    if (slash == std::string::npos) {
        const std::string p = clean(t);
        if (p.empty()) throw ParseError("malformed rational literal: '" + t + "'");
        return Rational(mpq_class(p));
    }
    const std::string p = clean(t.substr(0, slash)), q = clean(t.substr(slash + 1));
    if (p.empty() || q.empty()) throw ParseError("malformed rational literal: '" + t + "'");
    mpq_class v(p + "/" + q);
    if (v.get_den() == 0) throw ParseError("rational with zero denominator: '" + t + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw SingularMatrixError("reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : reciprocal();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw SingularMatrixError("division by zero rational");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace sbl
