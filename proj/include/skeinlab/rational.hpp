#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace skeinlab {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace skeinlab
