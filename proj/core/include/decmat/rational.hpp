#pragma once

#include <gmpxx.h>

#include <string>

namespace decmat {

// Exact rational arithmetic everywhere; no floating point in the library.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer rational_floor(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }

inline Integer rational_ceil(const Rational& r) { return ceil_div(r.get_num(), r.get_den()); }

}  // namespace decmat
