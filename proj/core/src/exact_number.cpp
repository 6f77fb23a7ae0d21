#include "conejump/exact_number.hpp"

#include <ostream>
#include <sstream>

#include "conejump/numbertheory.hpp"

namespace conejump {

namespace {

// One bisection step of (lo, hi) around the unique root of p inside.
// p has no rational roots, so midpoints are never roots.
void bisect_once(const Poly& p, Rational& lo, Rational& hi) {
    Rational mid = (lo + hi) / 2;
    if (p.sign_at(lo) * p.sign_at(mid) < 0)
        hi = mid;
    else
        lo = mid;
}

void refine_to_width(const Poly& p, Rational& lo, Rational& hi, const Rational& width) {
    while (hi - lo > width) bisect_once(p, lo, hi);
}

// Bracket of sqrt(d) with denominator 2^k: s/2^k <= sqrt(d) < (s+1)/2^k.
std::pair<Rational, Rational> sqrt_bracket(const Int& d, unsigned k) {
    Int scale = 1;
    scale <<= 2 * k;
    Int s = isqrt(d * scale);
    Int den = Int(1) << k;
    return {make_rational(s, den), make_rational(s + 1, den)};
}

std::pair<Rational, Rational> quadratic_enclosure(const QuadraticNumber& q, const Rational& width) {
    // |b| * (r_hi - r_lo) <= |b| / 2^k <= width.
    Rational babs = abs(q.b);
    unsigned k = 1;
    Int pow2 = 2;
    while (babs > width * Rational(pow2)) {
        pow2 *= 2;
        ++k;
    }
    auto [rlo, rhi] = sqrt_bracket(q.d, k);
    if (sgn(q.b) > 0) return {q.a + q.b * rlo, q.a + q.b * rhi};
    return {q.a + q.b * rhi, q.a + q.b * rlo};
}

// Algebraic view (squarefree integer polynomial without rational roots plus
// isolating interval) of an irrational ExactNumber.
struct AlgebraicView {
    Poly poly;
    Rational lo, hi;
};

AlgebraicView view_of_quadratic(const QuadraticNumber& q) {
    // Root of (x - a)^2 = b^2 d.
    Poly p = Poly({q.a * q.a - q.b * q.b * Rational(q.d), Rational(-2) * q.a, Rational(1)}).primitive();
    Rational width(1);
    auto [lo, hi] = quadratic_enclosure(q, width);
    while (sturm_root_count(p, lo, hi) != 1) {
        width /= 2;
        std::tie(lo, hi) = quadratic_enclosure(q, width);
    }
    return {p, lo, hi};
}

AlgebraicView view_of(const ExactNumber& x) {
    if (x.kind() == ExactNumber::Kind::Quadratic) return view_of_quadratic(x.quadratic_value());
    const AlgebraicNumber& a = x.algebraic_value();
    return {a.minpoly, a.lo, a.hi};
}

} // namespace

int quadratic_sign(const Rational& a, const Rational& b, const Int& d) {
    if (sgn(d) < 0) throw InvalidNumber("quadratic_sign: negative radicand");
    if (sgn(b) == 0 || d == 0) return sign(a);
    if (sgn(a) == 0) return sign(b);
    if (sgn(a) == sgn(b)) return sign(a);
    int cmp = sign(Rational(a * a - b * b * Rational(d)));
    return sgn(a) > 0 ? cmp : -cmp;
}

ExactNumber ExactNumber::quadratic(const Rational& a, const Rational& b, const Int& radicand) {
    if (sgn(radicand) < 0) throw InvalidNumber("negative radicand");
    if (sgn(b) == 0 || radicand == 0) return ExactNumber(a);
    auto [s, d] = squarefree_decompose(radicand);
    if (d == 1) return ExactNumber(Rational(a + b * Rational(s)));
    QuadraticNumber q{a, b * Rational(s), d};
    return ExactNumber(std::move(q));
}

ExactNumber ExactNumber::algebraic(const Poly& minpoly, const Rational& lo_in, const Rational& hi_in) {
    if (minpoly.is_zero() || minpoly.degree() < 1) throw InvalidNumber("algebraic: constant polynomial");
    if (!(lo_in < hi_in)) throw InvalidNumber("algebraic: empty interval");
    Poly p = minpoly.squarefree_part().primitive();
    Rational lo = lo_in, hi = hi_in;

    if (sturm_root_count(p, lo, hi) != 1)
        throw InvalidNumber("algebraic: interval does not isolate exactly one root");

    // A rational root inside the interval is the value itself.
    auto rr = p.rational_roots();
    for (const Rational& r : rr)
        if (lo < r && r < hi) return ExactNumber(r);
    for (const Rational& r : rr) p = p.exact_div(Poly({-r, Rational(1)}));

    bool certified = true;
    if (p.degree() <= 6) {
        for (const Poly& f : factor_integer_poly(p)) {
            if (sturm_root_count(f, lo, hi) == 1) {
                p = f;
                break;
            }
        }
    } else {
        certified = false;
    }

    if (p.degree() == 2) {
        // Collapse to the closed quadratic form.
        Rational A = p.coeff(2), B = p.coeff(1), C = p.coeff(0);
        Rational disc = B * B - 4 * A * C;
        Rational a = -B / (2 * A);
        Rational babs = Rational(1) / (2 * A); // A > 0 by primitive normalization
        Int num_sq = Int(disc.get_num()) * Int(disc.get_den());
        Rational scale = make_rational(Int(1), Int(disc.get_den()));
        // sqrt(disc) = sqrt(num*den) / den
        ExactNumber plus = ExactNumber::quadratic(a, babs * scale, num_sq);
        auto in_interval = [&](const ExactNumber& x) {
            return ExactNumber::compare(x, ExactNumber(lo)) > 0 && ExactNumber::compare(x, ExactNumber(hi)) < 0;
        };
        if (in_interval(plus)) return plus;
        ExactNumber minus = ExactNumber::quadratic(a, -babs * scale, num_sq);
        return minus;
    }

    // Re-isolate with dyadic endpoints, matching against the input interval.
    IsolatedRoots iso = isolate_real_roots(p);
    for (const auto& [jlo, jhi] : iso.intervals) {
        Rational olo = std::max(lo, jlo), ohi = std::min(hi, jhi);
        if (olo < ohi && sturm_root_count(p, olo, ohi) == 1) {
            AlgebraicNumber out{p, jlo, jhi, certified};
            return ExactNumber(std::move(out));
        }
    }
    throw InvalidNumber("algebraic: lost track of the isolated root");
}

const Rational& ExactNumber::rational_value() const {
    if (!is_rational()) throw InvalidNumber("not a rational value");
    return std::get<Rational>(v_);
}

const QuadraticNumber& ExactNumber::quadratic_value() const {
    if (kind() != Kind::Quadratic) throw InvalidNumber("not a quadratic value");
    return std::get<QuadraticNumber>(v_);
}

const AlgebraicNumber& ExactNumber::algebraic_value() const {
    if (kind() != Kind::Algebraic) throw InvalidNumber("not an algebraic value");
    return std::get<AlgebraicNumber>(v_);
}

int ExactNumber::algebraic_degree() const {
    switch (kind()) {
        case Kind::Rational: return 1;
        case Kind::Quadratic: return 2;
        default: return algebraic_value().minpoly.degree();
    }
}

bool ExactNumber::degree_certified() const {
    return kind() != Kind::Algebraic || algebraic_value().irreducible_certified;
}

int ExactNumber::sign() const {
    switch (kind()) {
        case Kind::Rational: return conejump::sign(rational_value());
        case Kind::Quadratic: {
            const auto& q = quadratic_value();
            return quadratic_sign(q.a, q.b, q.d);
        }
        default: {
            const auto& a = algebraic_value();
            if (conejump::sign(a.lo) >= 0) return 1;  // 0 is rational, never a root
            if (conejump::sign(a.hi) <= 0) return -1;
            Rational lo = a.lo, hi = a.hi;
            while (conejump::sign(lo) < 0 && conejump::sign(hi) > 0) bisect_once(a.minpoly, lo, hi);
            return conejump::sign(lo) >= 0 ? 1 : -1;
        }
    }
}

ExactNumber ExactNumber::affine(const Rational& u, const Rational& v) const {
    if (conejump::sign(v) == 0) return ExactNumber(u);
    switch (kind()) {
        case Kind::Rational: return ExactNumber(Rational(u + v * rational_value()));
        case Kind::Quadratic: {
            const auto& q = quadratic_value();
            QuadraticNumber out{u + v * q.a, v * q.b, q.d};
            return ExactNumber(std::move(out));
        }
        default: {
            const auto& a = algebraic_value();
            // y = u + v*alpha  =>  alpha = (y - u)/v, so transform the polynomial.
            Poly p = a.minpoly.compose_affine(-u / v, Rational(1) / v).primitive();
            Rational lo = u + v * a.lo, hi = u + v * a.hi;
            if (conejump::sign(v) < 0) std::swap(lo, hi);
            AlgebraicNumber out{p, lo, hi, a.irreducible_certified};
            return ExactNumber(std::move(out));
        }
    }
}

Int ExactNumber::floor() const {
    switch (kind()) {
        case Kind::Rational: return floor_int(rational_value());
        case Kind::Quadratic: {
            const auto& q = quadratic_value();
            auto [lo, hi] = quadratic_enclosure(q, make_rational(1, 64));
            Int n = floor_int(lo);
            // x >= n by construction; push up while x >= n+1.
            while (quadratic_sign(q.a - Rational(n + 1), q.b, q.d) >= 0) ++n;
            return n;
        }
        default: {
            const auto& a = algebraic_value();
            Rational lo = a.lo, hi = a.hi;
            while (floor_int(lo) != floor_int(hi)) bisect_once(a.minpoly, lo, hi);
            return floor_int(lo);
        }
    }
}

Int ExactNumber::ceil() const {
    if (is_rational()) return ceil_int(rational_value());
    return floor() + 1; // irrational: never an integer
}

std::pair<Rational, Rational> ExactNumber::enclosure(const Rational& width) const {
    if (conejump::sign(width) <= 0) throw InvalidNumber("enclosure: width must be positive");
    switch (kind()) {
        case Kind::Rational: return {rational_value(), rational_value()};
        case Kind::Quadratic: return quadratic_enclosure(quadratic_value(), width);
        default: {
            const auto& a = algebraic_value();
            Rational lo = a.lo, hi = a.hi;
            refine_to_width(a.minpoly, lo, hi, width);
            return {lo, hi};
        }
    }
}

Poly ExactNumber::minimal_polynomial() const {
    switch (kind()) {
        case Kind::Rational: {
            const Rational& q = rational_value();
            return Poly({-q, Rational(1)}).primitive();
        }
        case Kind::Quadratic: {
            const auto& q = quadratic_value();
            return Poly({q.a * q.a - q.b * q.b * Rational(q.d), Rational(-2) * q.a, Rational(1)}).primitive();
        }
        default: return algebraic_value().minpoly;
    }
}

namespace {

int compare_rational_algebraic(const Rational& q, const AlgebraicView& a) {
    // Returns sign of q - alpha.
    if (q <= a.lo) return -1;
    if (q >= a.hi) return 1;
    int sq = a.poly.sign_at(q);
    if (sq == 0) return 0; // cannot happen after rational-root stripping
    // alpha < q iff the sign change of the (single-root) interval happens left of q.
    return a.poly.sign_at(a.lo) * sq < 0 ? 1 : -1;
}

int compare_views(AlgebraicView x, AlgebraicView y) {
    // Common-root test: a shared value is a root of gcd(px, py).
    Poly g = Poly::gcd(x.poly, y.poly);
    bool may_be_equal = g.degree() >= 1;
    while (true) {
        Rational olo = std::max(x.lo, y.lo), ohi = std::min(y.hi, x.hi);
        if (!(olo < ohi)) break; // disjoint (touching endpoints are not roots)
        if (may_be_equal && sturm_root_count(g, olo, ohi) >= 1) return 0;
        bisect_once(x.poly, x.lo, x.hi);
        bisect_once(y.poly, y.lo, y.hi);
    }
    return x.hi <= y.lo ? -1 : 1;
}

} // namespace

int ExactNumber::compare(const ExactNumber& x, const ExactNumber& y) {
    if (x.is_rational() && y.is_rational()) return cmp(x.rational_value(), y.rational_value());
    if (x.kind() == Kind::Quadratic && y.kind() == Kind::Quadratic) {
        const auto& a = x.quadratic_value();
        const auto& b = y.quadratic_value();
        if (a.d == b.d) return quadratic_sign(a.a - b.a, a.b - b.b, a.d);
        return compare_views(view_of(x), view_of(y));
    }
    if (x.is_rational() && y.kind() == Kind::Quadratic) {
        const auto& b = y.quadratic_value();
        return quadratic_sign(x.rational_value() - b.a, -b.b, b.d);
    }
    if (x.kind() == Kind::Quadratic && y.is_rational()) return -compare(y, x);
    if (x.is_rational()) return compare_rational_algebraic(x.rational_value(), view_of(y));
    if (y.is_rational()) return -compare_rational_algebraic(y.rational_value(), view_of(x));
    return compare_views(view_of(x), view_of(y));
}

std::string ExactNumber::decimal(int digits) const {
    if (is_rational()) return decimal_string(rational_value(), digits);
    Int den = 1;
    for (int i = 0; i < digits + 3; ++i) den *= 10;
    Rational width = make_rational(1, den);
    auto [lo, hi] = enclosure(width);
    while (decimal_string(lo, digits) != decimal_string(hi, digits)) {
        width /= 1024;
        std::tie(lo, hi) = enclosure(width);
    }
    return decimal_string(lo, digits);
}

std::string ExactNumber::to_string() const {
    switch (kind()) {
        case Kind::Rational: return conejump::to_string(rational_value());
        case Kind::Quadratic: {
            const auto& q = quadratic_value();
            Int den;
            mpz_lcm(den.get_mpz_t(), q.a.get_den_mpz_t(), q.b.get_den_mpz_t());
            Int na = Int(q.a.get_num()) * (den / Int(q.a.get_den()));
            Int nb = Int(q.b.get_num()) * (den / Int(q.b.get_den()));
            std::ostringstream os;
            os << "(";
            if (na != 0) os << na.get_str() << (nb > 0 ? "+" : "");
            if (nb == -1) os << "-";
            else if (nb != 1) os << nb.get_str() << "*";
            os << "sqrt(" << q.d.get_str() << "))";
            if (den != 1) os << "/" << den.get_str();
            return os.str();
        }
        default: {
            const auto& a = algebraic_value();
            std::ostringstream os;
            os << "root of " << a.minpoly.to_string() << " in (" << conejump::to_string(a.lo) << ", "
               << conejump::to_string(a.hi) << ")";
            return os.str();
        }
    }
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) { return os << x.to_string(); }

ExactNumber quadratic_larger_root(const Rational& A, const Rational& B, const Rational& C) {
    if (sign(A) <= 0) throw InvalidNumber("quadratic_larger_root: leading coefficient must be positive");
    Rational disc = B * B - 4 * A * C;
    if (sign(disc) < 0) throw NegativeDiscriminant("discriminant " + to_string(disc));
    // (-B + sqrt(disc)) / 2A with sqrt(num*den)/den for exactness.
    Int num_sq = Int(disc.get_num()) * Int(disc.get_den());
    Rational b = make_rational(Int(1), Int(disc.get_den())) / (2 * A);
    return ExactNumber::quadratic(-B / (2 * A), b, num_sq);
}

int ConePoint::sign() const { return value().sign(); }

Int floor_conepoint(const ConePoint& t) { return t.value().floor(); }

long sturm_root_count_op(const Poly& p, const Rational& lo, const Rational& hi) {
    return sturm_root_count(p, lo, hi);
}

} // namespace conejump
