#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "cstar/errors.hpp"

namespace cstar {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw PreconditionError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Fractional part in [0, 1).
inline Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer abs_of(const Integer& z) { return z < 0 ? Integer(-z) : z; }

inline Integer gcd_of(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Non-negative remainder of a modulo m (m > 0).
inline Integer mod_of(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// x^n for any integer n; x must be nonzero when n < 0.
inline Rational pow_of(const Rational& x, long n) {
    Rational base = x;
    if (n < 0) {
        if (base == 0)
            throw PreconditionError("negative power of zero");
        base = 1 / base;
        n = -n;
    }
    Rational acc = 1;
    while (n > 0) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "a", "-a", "a/b" in decimal. Whitespace around the token is ignored.
inline Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    std::string s(text);
    if (s.empty())
        throw ParseError("empty rational");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_digit = false;
    bool seen_slash = false;
    bool digit_after_slash = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
            if (seen_slash)
                digit_after_slash = true;
        } else if (c == '/' && seen_digit && !seen_slash) {
            seen_slash = true;
        } else {
            throw ParseError("invalid rational '" + s + "'");
        }
    }
    if (!seen_digit || (seen_slash && !digit_after_slash))
        throw ParseError("invalid rational '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("invalid rational '" + s + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

/// Converts to long, throwing if the value does not fit.
inline long to_long(const Integer& z) {
    if (!z.fits_slong_p())
        throw UnsupportedError("integer " + z.get_str() + " exceeds machine range");
    return z.get_si();
}

}  // namespace cstar
