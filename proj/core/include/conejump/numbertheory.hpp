#ifndef CONEJUMP_NUMBERTHEORY_HPP
#define CONEJUMP_NUMBERTHEORY_HPP

#include <utility>
#include <vector>

#include "conejump/rational.hpp"

namespace conejump {

// True iff n = r^2 for some integer r. Requires n >= 0.
bool is_perfect_square(const Int& n);

// True iff q is the square of a rational.
bool is_perfect_square(const Rational& q);

// Integer square root, rounded down. Requires n >= 0.
Int isqrt(const Int& n);

// Writes n = s^2 * d with d squarefree and returns (s, d). Requires n > 0.
// Complete trial-division factorization; intended for the small radicands
// produced by discriminants, not cryptographic sizes.
std::pair<Int, Int> squarefree_decompose(const Int& n);

bool is_prime(const Int& n);

// p-adic valuation v_p(n) for n != 0.
unsigned long padic_valuation(const Int& n, const Int& p);

// Multiplicative order of a modulo n, for gcd(a, n) = 1, n >= 1.
// Returns 1 when n = 1.
unsigned long multiplicative_order(const Int& a, const Int& n);

// Primes below `bound`, smallest first.
std::vector<long> primes_below(long bound);

} // namespace conejump

#endif
