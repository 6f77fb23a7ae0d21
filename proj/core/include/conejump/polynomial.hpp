#ifndef CONEJUMP_POLYNOMIAL_HPP
#define CONEJUMP_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "conejump/rational.hpp"

namespace conejump {

// Dense univariate polynomial over Q. Coefficient i is the coefficient of x^i;
// the zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly variable(); // x
    static Poly from_int_coeffs(const std::vector<long>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign((*this)(x)); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    Poly derivative() const;

    // Quotient and remainder of exact division over Q.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;
    // Exact quotient; throws if the remainder is nonzero.
    Poly exact_div(const Poly& divisor) const;

    // Monic gcd over Q (1 for coprime inputs).
    static Poly gcd(Poly a, Poly b);

    // p / gcd(p, p'): same roots, all simple.
    Poly squarefree_part() const;

    // Primitive integer model: clears denominators, divides by integer
    // content, makes the leading coefficient positive.
    Poly primitive() const;
    bool is_integral() const;
    std::vector<Int> integer_coeffs() const; // requires is_integral()

    // p(u + v x), exact.
    Poly compose_affine(const Rational& u, const Rational& v) const;

    // All rational roots (each listed once), via the rational root theorem.
    std::vector<Rational> rational_roots() const;

    // 1 + max |a_i| / |a_n|: every real root lies in (-B, B).
    Rational cauchy_root_bound() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Sturm chain of p (remainders of the signed Euclidean sequence).
std::vector<Poly> sturm_chain(const Poly& p);

// Number of distinct real roots of p in the open interval (lo, hi).
// Endpoints that happen to be roots are deflated away first, so the count
// is always the open-interval count.
long sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi);
long sturm_root_count(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi);

struct IsolatedRoots {
    std::vector<Rational> rational;               // exact rational roots
    std::vector<std::pair<Rational, Rational>> intervals; // one irrational root each,
                                                          // dyadic endpoints, not roots
};

// Isolates all distinct real roots of p (rational roots exactly, irrational
// roots by disjoint isolating intervals, sorted ascending between the two
// lists independently).
IsolatedRoots isolate_real_roots(const Poly& p);

// Exact determinant of a square matrix with polynomial entries
// (column-subset Laplace expansion; fine for the ranks used here).
Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m);

// Complete factorization of a primitive integer polynomial of degree <= 6
// into primitive irreducible integer factors (content dropped, each with
// positive leading coefficient, repeated factors repeated in the output).
// Throws DegreeTooLarge above degree 6.
std::vector<Poly> factor_integer_poly(const Poly& p);

// Irreducibility over Q for primitive integer polynomials of degree <= 6.
bool poly_is_irreducible(const Poly& p);

} // namespace conejump

#endif
