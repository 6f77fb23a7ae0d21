#ifndef CONEJUMP_RATIONAL_HPP
#define CONEJUMP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "conejump/errors.hpp"

namespace conejump {

// GMP-backed exact arithmetic. mpq_class is kept canonical (lowest terms,
// positive denominator) by GMP itself; helpers below add the pieces GMP
// does not ship.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InvalidNumber("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw InvalidNumber("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Int floor_int(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_int(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Int& n) { return sgn(n); }

// Parses "p/q", "p", or a decimal literal like "-1.25" into an exact rational.
Rational parse_rational(const std::string& text);

// Renders q as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Correctly rounded decimal expansion with `digits` places after the point
// (round half away from zero; exact for rationals).
std::string decimal_string(const Rational& q, int digits);

} // namespace conejump

#endif
