#ifndef CONEJUMP_CONEIDEAL_HPP
#define CONEJUMP_CONEIDEAL_HPP

#include <string>
#include <vector>

#include "conejump/exact_number.hpp"
#include "conejump/threshold.hpp"

namespace conejump {

// Everything needed to evaluate the exponent functions of the cone over
// (W, A): the threshold theta, its truncation t0, the tail-jump offset
// kappa = 1 - t0, and the generator count r of the vertex ideal.
struct ConeIdealModel {
    ExactNumber theta;
    ExactNumber t0;
    ExactNumber kappa;
    long r = 1;
    bool k_psef = false;
    bool normalized = false; // 0 < t0 < 1
    std::shared_ptr<const ExactNumber> theta_ref;

    ConePoint point(const Rational& u, const Rational& v) const { return ConePoint(u, v, theta_ref); }
    ConePoint rational_point(const Rational& q) const { return ConePoint(q, Rational(0), theta_ref); }
    // The tail jumping point n + kappa (= (n+1) - theta when theta = t0).
    ConePoint jump_point(long n) const;
};

// k_psef asserts theta = t0 and therefore requires theta >= 0.
ConeIdealModel make_model(const ExactNumber& theta, long r, bool k_psef);
ConeIdealModel make_model(const ThresholdResult& threshold, long r, bool k_psef);

// A power of the vertex maximal ideal; exponent 0 is the whole ring.
struct IdealPower {
    Int exponent;
    bool operator==(const IdealPower& o) const { return exponent == o.exponent; }
};

std::string to_string(const IdealPower& p);

// max{0, floor(t + 1 + theta)}: the multiplier-ideal exponent of the cone at
// parameter t >= 0.
IdealPower dfh_exponent(const ConeIdealModel& model, const ConePoint& t);

// max{0, floor(t + 1 + q_m/m)}: the m-th approximation.
IdealPower jm_exponent(long m, const Int& q_m, const Rational& t);

// Minimal integer q with q A - m K_W pseudo-effective: ceil(m * theta), with
// ties included in the rational case.
Int qm_psef(const ConeIdealModel& model, long m);

struct QmRow {
    long m = 0;
    Int q_m;
    Rational ratio;         // q_m / m
    int sign_vs_theta = 0;  // sign of q_m/m - theta
};

struct QmReport {
    std::vector<QmRow> rows;
    bool subadditive = true;       // q_{m+n} <= q_m + q_n for m+n <= M
    bool ratio_above_theta = true; // q_m/m >= theta for all m
    bool within_inverse_m = true;  // |q_m/m - theta| < 1/m for all m
    std::vector<std::string> violations;
    bool pass() const { return subadditive && ratio_above_theta && within_inverse_m; }
};

QmReport qm_sequence_report(const ConeIdealModel& model, long max_m);

// floor(s + 1 + t) for rational s > 0, t >= 0: the exponent along the
// auxiliary boundary at parameter s.
IdealPower gamma_s_exponent(const Rational& s, const Rational& t);

// floor(k + t) for a discrepancy coefficient k >= 1 + theta (checked
// exactly; k lives in the Q-span u + v*theta). Result is clamped at 0 and is
// always >= dfh_exponent(t).
IdealPower boundary_upper_exponent(const ConeIdealModel& model, const ConePoint& k, const ConePoint& t);
IdealPower boundary_upper_exponent(const ConeIdealModel& model, const Rational& k, const ConePoint& t);

// All jump locations of dfh_exponent in (lo, hi]: the points where
// t + 1 + theta crosses an integer and the clamped exponent strictly
// increases. For a normalized irrational model these are exactly the tail
// points n + kappa. Each returned point is verified to be a strict jump.
std::vector<ConePoint> jumping_numbers(const ConeIdealModel& model, const Rational& lo, const Rational& hi);

// Exponent-level translation: dfh(t) = dfh(t-1) + 1, valid for t >= r.
bool skoda_translate_check(const ConeIdealModel& model, const ConePoint& t);

struct RigidityReport {
    long n = 0;
    Rational epsilon;
    long samples = 0;
    bool lower_window_ok = true;  // exponent n+1 on [n, n+kappa-eps]
    bool upper_window_ok = true;  // exponent n+2 on [n+kappa, n+1]
    bool endpoint_exact_ok = true; // symbolic evaluation at n+kappa
    std::vector<std::string> violations;
    bool pass() const { return lower_window_ok && upper_window_ok && endpoint_exact_ok; }
};

// Samples both windows around the jump at n + kappa. Requires 0 < eps < kappa
// (exact comparison) and theta = t0 (theta >= 0).
RigidityReport rigidity_window_check(const ConeIdealModel& model, const Rational& epsilon, long n,
                                     long samples = 100);

// Strictly increasing rationals t_i < kappa with t_i -> kappa,
// |kappa - t_i| < 2^-i, written t_i = 1 - s_i with s_i rational decreasing
// to t0 and denominator coprime to p (dyadic denominators; p > 2).
std::vector<Rational> rational_approx_kappa(const ConeIdealModel& model, long count, long p);

// Frobenius twisting data: minimal b, c with d | p^b (p^c - 1).
struct FrobeniusIndex {
    Int p;
    unsigned long b = 0;
    unsigned long c = 1;
    Int d; // the divisor the index was built for
    Int modulus() const; // p^b (p^c - 1)
};

FrobeniusIndex frobenius_bc(const Int& d, const Int& p);

// The fraction lattice {j / N : 0 <= j < N} with N = p^b(p^c - 1).
struct AllowedFractions {
    FrobeniusIndex index;
    Int modulus;
    bool contains(const Rational& alpha) const;
    // First min(N, cap) elements, ascending.
    std::vector<Rational> enumerate(long cap = 64) const;
};

AllowedFractions allowed_fractions(const FrobeniusIndex& index);

} // namespace conejump

#endif
