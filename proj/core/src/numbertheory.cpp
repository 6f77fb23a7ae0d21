#include "conejump/numbertheory.hpp"

#include <stdexcept>

namespace conejump {

bool is_perfect_square(const Int& n) {
    if (sgn(n) < 0) throw InvalidNumber("is_perfect_square: negative argument");
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_perfect_square(const Rational& q) {
    if (sgn(q) < 0) return false;
    return is_perfect_square(Int(q.get_num())) && is_perfect_square(Int(q.get_den()));
}

Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw InvalidNumber("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (sgn(n) <= 0) throw InvalidNumber("squarefree_decompose: argument must be positive");
    Int s = 1, d = 1, m = n;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        unsigned long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (unsigned long i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) d *= p;
    }
    d *= m; // residual factor is prime (or 1), hence squarefree
    return {s, d};
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned long padic_valuation(const Int& n, const Int& p) {
    if (sgn(n) == 0) throw InvalidNumber("padic_valuation: zero argument");
    if (p < 2) throw InvalidNumber("padic_valuation: modulus must be >= 2");
    unsigned long v = 0;
    Int m = abs(n);
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

unsigned long multiplicative_order(const Int& a, const Int& n) {
    if (n < 1) throw InvalidNumber("multiplicative_order: modulus must be >= 1");
    if (n == 1) return 1;
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    if (g != 1) throw InvalidNumber("multiplicative_order: arguments not coprime");
    Int x = a % n;
    if (x < 0) x += n;
    Int acc = x;
    unsigned long order = 1;
    while (acc != 1) {
        acc = (acc * x) % n;
        ++order;
    }
    return order;
}

std::vector<long> primes_below(long bound) {
    std::vector<long> out;
    if (bound <= 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound), true);
    for (long i = 2; i < bound; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = 2 * i; j < bound; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

} // namespace conejump
