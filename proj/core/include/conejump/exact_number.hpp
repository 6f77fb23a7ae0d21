#ifndef CONEJUMP_EXACT_NUMBER_HPP
#define CONEJUMP_EXACT_NUMBER_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "conejump/polynomial.hpp"
#include "conejump/rational.hpp"

namespace conejump {

// a + b*sqrt(d) with d squarefree >= 2 and b != 0 (the rational case lives in
// the Rational alternative of ExactNumber instead).
struct QuadraticNumber {
    Rational a, b;
    Int d;
};

// Real algebraic number given by a squarefree primitive integer polynomial
// with positive leading coefficient and no rational roots, together with an
// isolating interval (lo, hi) that contains exactly one real root and whose
// endpoints are dyadic and not roots. `irreducible_certified` is true when
// the polynomial is known irreducible (always achievable up to degree 6);
// above degree 6 the polynomial may a priori be a product of irreducible
// factors of degree >= 2, which changes nothing for comparisons or floors,
// only for exact degree reporting.
struct AlgebraicNumber {
    Poly minpoly;
    Rational lo, hi;
    bool irreducible_certified = true;
};

// Exact real number: rational, quadratic irrational, or general real
// algebraic. Values are immutable and canonical: a quadratic or algebraic
// alternative is always irrational, and degree-2 algebraic input collapses
// to the quadratic form.
class ExactNumber {
public:
    enum class Kind { Rational, Quadratic, Algebraic };

    ExactNumber() : v_(Rational(0)) {}
    ExactNumber(const Rational& q) : v_(q) {}
    ExactNumber(long n) : v_(Rational(n)) {}

    // a + b*sqrt(radicand); extracts the square part of the radicand and
    // collapses to a rational when possible. radicand must be >= 0.
    static ExactNumber quadratic(const Rational& a, const Rational& b, const Int& radicand);

    // The unique root of `minpoly` in (lo, hi). Canonicalizes: squarefree
    // part, rational-root stripping, full factorization up to degree 6,
    // dyadic re-isolation. Degree-1/2 results collapse to
    // Rational/QuadraticNumber.
    static ExactNumber algebraic(const Poly& minpoly, const Rational& lo, const Rational& hi);

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_rational() const { return kind() == Kind::Rational; }
    bool is_irrational() const { return !is_rational(); }
    const Rational& rational_value() const;
    const QuadraticNumber& quadratic_value() const;
    const AlgebraicNumber& algebraic_value() const;

    // 1 for rationals, 2 for quadratics, deg(minpoly) otherwise.
    int algebraic_degree() const;
    // False only for an algebraic alternative whose minpoly exceeded the
    // degree-6 factorization limit.
    bool degree_certified() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_integer_value() const { return is_rational() && is_integer(rational_value()); }

    // u + v * (*this), exact and canonical.
    ExactNumber affine(const Rational& u, const Rational& v) const;
    ExactNumber operator-() const { return affine(Rational(0), Rational(-1)); }

    Int floor() const;
    Int ceil() const;

    // Exact trichotomy: -1, 0, +1.
    static int compare(const ExactNumber& x, const ExactNumber& y);
    bool operator==(const ExactNumber& o) const { return compare(*this, o) == 0; }
    bool operator!=(const ExactNumber& o) const { return compare(*this, o) != 0; }
    bool operator<(const ExactNumber& o) const { return compare(*this, o) < 0; }
    bool operator<=(const ExactNumber& o) const { return compare(*this, o) <= 0; }
    bool operator>(const ExactNumber& o) const { return compare(*this, o) > 0; }
    bool operator>=(const ExactNumber& o) const { return compare(*this, o) >= 0; }

    // Rational enclosure lo <= x <= hi with hi - lo <= width (degenerate for
    // rationals; strict for irrationals).
    std::pair<Rational, Rational> enclosure(const Rational& width) const;

    // Minimal polynomial (primitive, positive leading coefficient); for the
    // uncertified algebraic case, the stored squarefree polynomial.
    Poly minimal_polynomial() const;

    // Correctly rounded decimal expansion, `digits` places after the point.
    std::string decimal(int digits) const;
    std::string to_string() const;

private:
    explicit ExactNumber(QuadraticNumber q) : v_(std::move(q)) {}
    explicit ExactNumber(AlgebraicNumber a) : v_(std::move(a)) {}

    std::variant<Rational, QuadraticNumber, AlgebraicNumber> v_;
};

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

// Sign of a + b*sqrt(d), fully exact (d need not be squarefree).
int quadratic_sign(const Rational& a, const Rational& b, const Int& d);

// Larger real root of A x^2 + B x + C (A > 0) in canonical exact form.
// Throws NegativeDiscriminant when B^2 - 4AC < 0.
ExactNumber quadratic_larger_root(const Rational& A, const Rational& B, const Rational& C);

// Point u + v*theta of the 2-dimensional Q-span attached to a threshold.
// All exponent-function arguments live here: rationals are v = 0, the tail
// jumping points n+kappa are u = n+1, v = -1.
struct ConePoint {
    Rational u, v;
    std::shared_ptr<const ExactNumber> theta;

    ConePoint(Rational u_, Rational v_, std::shared_ptr<const ExactNumber> theta_)
        : u(std::move(u_)), v(std::move(v_)), theta(std::move(theta_)) {}

    static ConePoint rational(const Rational& q, std::shared_ptr<const ExactNumber> theta) {
        return ConePoint(q, Rational(0), std::move(theta));
    }

    ExactNumber value() const { return theta->affine(u, v); }
    int sign() const;
    ConePoint shifted(const Rational& delta) const { return ConePoint(u + delta, v, theta); }
    // t + 1 + theta, the argument of the exponent floor.
    ConePoint plus_one_plus_theta() const { return ConePoint(u + 1, v + 1, theta); }
};

// Exact floor of u + v*theta. Integer values are detected symbolically
// (canonical affine arithmetic collapses them to rationals); irrational
// values are floored by interval refinement, which always terminates.
Int floor_conepoint(const ConePoint& t);

// Distinct real roots of p in the open interval (lo, hi); endpoints that are
// roots are not counted. Requires p != 0 and lo < hi.
long sturm_root_count_op(const Poly& p, const Rational& lo, const Rational& hi);

} // namespace conejump

#endif
