#pragma once

#include <gmpxx.h>

#include <string>

#include "gradekit/error.hpp"

namespace gradekit {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q" with decimal digits; anything else is rejected.
inline Rational parse_rational(const std::string& s) {
    auto is_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char ch : t)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    require(is_digits(num) && is_digits(den), "malformed rational '" + s + "'");
    Rational r(num + "/" + den);
    require(r.get_den() != 0, "zero denominator in '" + s + "'");
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline bool rational_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    const Integer num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rational(sn) / Rational(sd);
    return true;
}

inline int sign(const Rational& r) { return sgn(r); }

} // namespace gradekit
