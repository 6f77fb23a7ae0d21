#include "conejump/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "conejump/numbertheory.hpp"

namespace conejump {

namespace {

// Positive divisors via trial division; inputs here are coefficient-sized.
std::vector<Int> positive_divisors(Int n) {
    n = abs(n);
    if (n == 0) throw InvalidNumber("divisors of zero");
    std::vector<Int> out{1};
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        size_t base = out.size();
        Int pk = 1;
        while (n % p == 0) {
            n /= p;
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    if (n > 1) {
        size_t base = out.size();
        for (size_t i = 0; i < base; ++i) out.push_back(out[i] * n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) {
    if (sgn(c) == 0) return Poly();
    return Poly({c});
}

Poly Poly::variable() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::from_int_coeffs(const std::vector<long>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

const Rational& Poly::coeff(size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Rational& Poly::leading() const {
    if (is_zero()) throw InvalidNumber("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& k) const {
    if (sgn(k) == 0) return Poly();
    std::vector<Rational> c(coeffs_);
    for (auto& v : c) v *= k;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    if (divisor.is_zero()) throw InvalidNumber("polynomial division by zero");
    Poly rem = *this;
    std::vector<Rational> q;
    int dq = degree() - divisor.degree();
    if (dq < 0) return {Poly(), rem};
    q.assign(static_cast<size_t>(dq) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        size_t shift = static_cast<size_t>(rem.degree() - divisor.degree());
        Rational factor = rem.leading() / divisor.leading();
        q[shift] = factor;
        std::vector<Rational> sub(shift + divisor.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < divisor.coeffs_.size(); ++i) sub[shift + i] = divisor.coeffs_[i] * factor;
        rem = rem - Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) throw InvalidNumber("inexact polynomial division");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

Poly Poly::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    Poly g = gcd(*this, derivative());
    return exact_div(g);
}

bool Poly::is_integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    Int den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Int content = 0;
    std::vector<Int> scaled;
    scaled.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        Int v = Int(c.get_num()) * (den_lcm / Int(c.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        scaled.push_back(v);
    }
    if (sgn(scaled.back()) < 0) content = -content;
    std::vector<Rational> out;
    out.reserve(scaled.size());
    for (const auto& v : scaled) out.emplace_back(Rational(v / content));
    return Poly(std::move(out));
}

std::vector<Int> Poly::integer_coeffs() const {
    if (!is_integral()) throw InvalidNumber("integer_coeffs on non-integral polynomial");
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.emplace_back(c.get_num());
    return out;
}

Poly Poly::compose_affine(const Rational& u, const Rational& v) const {
    Poly arg({u, v});
    Poly acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * arg + Poly::constant(coeffs_[i]);
    return acc;
}

std::vector<Rational> Poly::rational_roots() const {
    if (is_zero()) throw InvalidNumber("rational_roots of zero polynomial");
    std::vector<Rational> roots;
    Poly p = primitive();
    // Strip x^k.
    size_t low = 0;
    while (low < p.coeffs_.size() && sgn(p.coeffs_[low]) == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        p = Poly(std::vector<Rational>(p.coeffs_.begin() + static_cast<long>(low), p.coeffs_.end()));
    }
    if (p.degree() < 1) return roots;
    Int a0(p.coeff(0).get_num());
    Int an(p.leading().get_num());
    for (const Int& num : positive_divisors(a0)) {
        for (const Int& den : positive_divisors(an)) {
            Rational cand = make_rational(num, den);
            if (p(cand) == 0) roots.push_back(cand);
            if (p(-cand) == 0) roots.push_back(-cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Rational Poly::cauchy_root_bound() const {
    if (is_zero()) throw InvalidNumber("root bound of zero polynomial");
    Rational m(0);
    for (size_t i = 0; i + 1 < coeffs_.size(); ++i) m = std::max(m, Rational(abs(coeffs_[i] / leading())));
    return m + 1;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (i == 0 || a != 1) os << conejump::to_string(a) << (i > 0 ? "*" : "");
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly r = a.divrem(b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

long sign_variations_at(const std::vector<Poly>& chain, const Rational& x) {
    long v = 0;
    int prev = 0;
    for (const auto& q : chain) {
        int s = q.is_zero() ? 0 : q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

long sturm_root_count(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw InvalidNumber("sturm_root_count: empty interval");
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

long sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw InvalidNumber("sturm_root_count: zero polynomial");
    if (!(lo < hi)) throw InvalidNumber("sturm_root_count: empty interval");
    Poly q = p;
    // Deflate roots sitting exactly on an endpoint; the open-interval count
    // over the remaining roots is unchanged.
    for (const Rational& e : {lo, hi}) {
        Poly lin({-e, Rational(1)});
        while (!q.is_zero() && q.degree() >= 1 && q(e) == 0) q = q.exact_div(lin);
    }
    if (q.degree() < 1) return 0;
    return sturm_root_count(sturm_chain(q), lo, hi);
}

IsolatedRoots isolate_real_roots(const Poly& p) {
    if (p.is_zero()) throw InvalidNumber("isolate_real_roots: zero polynomial");
    IsolatedRoots out;
    Poly q = p.squarefree_part().primitive();
    for (const Rational& r : q.rational_roots()) {
        out.rational.push_back(r);
        q = q.exact_div(Poly({-r, Rational(1)}));
    }
    if (q.degree() >= 1) {
        // Dyadic power-of-two bound, so every bisection midpoint is dyadic.
        Rational bound = q.cauchy_root_bound();
        Int b = ceil_int(bound);
        Int two(1);
        while (two < b) two *= 2;
        auto chain = sturm_chain(q);
        std::vector<std::pair<Rational, Rational>> work{{Rational(-two), Rational(two)}};
        while (!work.empty()) {
            auto [lo, hi] = work.back();
            work.pop_back();
            long n = sturm_root_count(chain, lo, hi);
            if (n == 0) continue;
            if (n == 1) {
                out.intervals.emplace_back(lo, hi);
                continue;
            }
            Rational mid = (lo + hi) / 2;
            // q has no rational roots left, so mid is never a root.
            work.emplace_back(lo, mid);
            work.emplace_back(mid, hi);
        }
        std::sort(out.intervals.begin(), out.intervals.end());
    }
    std::sort(out.rational.begin(), out.rational.end());
    return out;
}

Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidNumber("poly_matrix_det: matrix not square");
    if (n == 0) return Poly::constant(Rational(1));
    if (n > 12) throw RankTooLarge("poly_matrix_det: size > 12");
    // Expansion along rows top-down; the row index is determined by the
    // remaining column set, so the memo keys on the set alone.
    std::map<unsigned, Poly> memo;
    std::function<Poly(size_t, unsigned)> det = [&](size_t row, unsigned cols) -> Poly {
        if (row == n) return Poly::constant(Rational(1));
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        Poly acc;
        int parity = 0;
        for (size_t c = 0; c < n; ++c) {
            unsigned bit = 1u << c;
            if (!(cols & bit)) continue;
            Poly sub = det(row + 1, cols & ~bit);
            Poly term = m[row][c] * sub;
            acc = (parity % 2 == 0) ? acc + term : acc - term;
            ++parity;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return det(0, (1u << n) - 1);
}

namespace {

// --- F_p polynomial helpers for the irreducibility certificate ---

using FpPoly = std::vector<long>; // coefficient i of x^i, entries in [0, p)

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long fp_pow(long base, long exp, long p) {
    long r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

long fp_inv(long a, long p) { return fp_pow(a, p - 2, p); }

FpPoly fp_rem(FpPoly a, const FpPoly& b, long p) {
    long inv_lead = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        long f = a.back() * inv_lead % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// True iff `a` (degree d >= 2) has no monic factor of degree k over F_p.
bool fp_no_factor_of_degree(const FpPoly& a, int k, long p) {
    std::vector<long> cand(static_cast<size_t>(k) + 1, 0);
    cand.back() = 1;
    // Enumerate all monic degree-k polynomials.
    while (true) {
        if (fp_rem(a, cand, p).empty()) return false;
        int i = 0;
        while (i < k && ++cand[static_cast<size_t>(i)] == p) {
            cand[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return true;
}

// Sufficient certificate: reduction mod p keeps the degree and is irreducible
// over F_p. Returns false when the certificate does not fire (says nothing).
bool modp_irreducible_certificate(const std::vector<Int>& coeffs, long p) {
    FpPoly a;
    a.reserve(coeffs.size());
    for (const Int& c : coeffs) {
        Int r = c % p;
        if (r < 0) r += p;
        a.push_back(r.get_si());
    }
    fp_trim(a);
    if (a.size() != coeffs.size()) return false; // degree dropped
    int d = static_cast<int>(a.size()) - 1;
    for (int k = 1; k <= d / 2; ++k)
        if (!fp_no_factor_of_degree(a, k, p)) return false;
    return true;
}

// Mignotte-style bound on |coefficients| of any factor of degree k.
Int factor_coeff_bound(const std::vector<Int>& coeffs, int k) {
    Int norm2_sq = 0;
    for (const Int& c : coeffs) norm2_sq += c * c;
    Int norm2 = isqrt(norm2_sq) + 1;
    Int two_k = 1;
    for (int i = 0; i < k; ++i) two_k *= 2;
    return two_k * norm2;
}

// Exhaustive search for a primitive integer factor of degree k of the
// primitive polynomial g (which has no rational roots). Complete: leading and
// constant coefficients are constrained by divisibility, middle coefficients
// by the Mignotte bound, and g(1)/g(-1) divisibility filters prune candidates
// before the exact division test.
std::optional<Poly> find_factor_of_degree(const Poly& g, int k) {
    std::vector<Int> gc = g.integer_coeffs();
    Int bound = factor_coeff_bound(gc, k);
    Rational g1 = g(Rational(1));
    Rational gm1 = g(Rational(-1));
    std::vector<Int> lead_divs = positive_divisors(gc.back());
    std::vector<Int> const_divs = positive_divisors(gc.front());

    std::vector<Int> middle(static_cast<size_t>(k) - 1, -bound);
    for (const Int& ck : lead_divs) {
        for (const Int& c0_abs : const_divs) {
            for (int c0_sign : {1, -1}) {
                Int c0 = c0_sign * c0_abs;
                std::fill(middle.begin(), middle.end(), -bound);
                while (true) {
                    Int h1 = ck + c0;
                    Int hm1 = (k % 2 == 0) ? Int(ck + c0) : Int(c0 - ck);
                    for (size_t i = 0; i < middle.size(); ++i) {
                        h1 += middle[i];
                        hm1 += (i % 2 == 0 ? -middle[i] : middle[i]);
                    }
                    bool plausible = h1 != 0 && hm1 != 0;
                    if (plausible) {
                        Rational q1 = g1 / Rational(h1), q2 = gm1 / Rational(hm1);
                        plausible = is_integer(q1) && is_integer(q2);
                    }
                    if (plausible) {
                        std::vector<Rational> hc;
                        hc.emplace_back(c0);
                        for (const Int& c : middle) hc.emplace_back(c);
                        hc.emplace_back(ck);
                        Poly h(std::move(hc));
                        if (h.degree() == k && g.divrem(h).second.is_zero()) return h.primitive();
                    }
                    size_t idx = 0;
                    while (idx < middle.size() && ++middle[idx] > bound) {
                        middle[idx] = -bound;
                        ++idx;
                    }
                    if (idx == middle.size()) break;
                }
            }
        }
    }
    return std::nullopt;
}

void factor_rec(const Poly& p, std::vector<Poly>& out) {
    Poly g = p.primitive();
    int d = g.degree();
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(g);
        return;
    }
    auto roots = g.rational_roots();
    if (!roots.empty()) {
        Poly lin = Poly({-roots[0], Rational(1)}).primitive();
        out.push_back(lin);
        factor_rec(g.exact_div(Poly({-roots[0], Rational(1)})), out);
        return;
    }
    if (d <= 3) {
        out.push_back(g);
        return;
    }
    for (long p_cert : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        if (modp_irreducible_certificate(g.integer_coeffs(), p_cert)) {
            out.push_back(g);
            return;
        }
    }
    for (int k = 2; k <= d / 2; ++k) {
        if (auto h = find_factor_of_degree(g, k)) {
            factor_rec(*h, out);
            factor_rec(g.exact_div(*h), out);
            return;
        }
    }
    out.push_back(g);
}

} // namespace

std::vector<Poly> factor_integer_poly(const Poly& p) {
    if (p.is_zero()) throw InvalidNumber("factor of zero polynomial");
    if (p.degree() > 6) throw DegreeTooLarge("factorization limited to degree <= 6");
    std::vector<Poly> out;
    factor_rec(p, out);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

bool poly_is_irreducible(const Poly& p) {
    int d = p.degree();
    if (d < 1) throw InvalidNumber("irreducibility needs degree >= 1");
    if (d > 6) throw DegreeTooLarge("irreducibility test limited to degree <= 6");
    if (d == 1) return true;
    Poly g = p.primitive();
    if (!g.rational_roots().empty()) return false;
    if (d <= 3) return true;
    for (long p_cert : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        if (modp_irreducible_certificate(g.integer_coeffs(), p_cert)) return true;
    }
    for (int k = 2; k <= d / 2; ++k)
        if (find_factor_of_degree(g, k)) return false;
    return true;
}

} // namespace conejump
