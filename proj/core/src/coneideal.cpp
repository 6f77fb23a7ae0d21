#include "conejump/coneideal.hpp"

#include <algorithm>

#include "conejump/numbertheory.hpp"

namespace conejump {

ConePoint ConeIdealModel::jump_point(long n) const {
    if (theta.sign() >= 0) return ConePoint(Rational(n + 1), Rational(-1), theta_ref); // (n+1) - t0
    return ConePoint(Rational(n + 1), Rational(0), theta_ref);                         // t0 = 0, kappa = 1
}

ConeIdealModel make_model(const ExactNumber& theta, long r, bool k_psef) {
    if (r < 1) throw InvalidNumber("generator count r must be >= 1");
    if (k_psef && theta.sign() < 0)
        throw HypothesisViolated("k_psef forces theta = t0 >= 0, got negative theta");
    ConeIdealModel m;
    m.theta = theta;
    m.t0 = theta.sign() > 0 ? theta : ExactNumber(Rational(0));
    m.kappa = m.t0.affine(Rational(1), Rational(-1));
    m.r = r;
    m.k_psef = k_psef;
    m.normalized = m.t0.sign() > 0 && ExactNumber::compare(m.t0, ExactNumber(1L)) < 0;
    m.theta_ref = std::make_shared<ExactNumber>(theta);
    return m;
}

ConeIdealModel make_model(const ThresholdResult& threshold, long r, bool k_psef) {
    return make_model(threshold.theta, r, k_psef);
}

std::string to_string(const IdealPower& p) {
    if (p.exponent == 0) return "R";
    if (p.exponent == 1) return "m";
    return "m^" + p.exponent.get_str();
}

namespace {

void require_same_theta(const ConeIdealModel& model, const ConePoint& t) {
    if (t.theta == model.theta_ref) return;
    if (t.theta && ExactNumber::compare(*t.theta, *model.theta_ref) == 0) return;
    throw InvalidNumber("cone point built against a different threshold");
}

Int clamped(const Int& e) { return e < 0 ? Int(0) : e; }

} // namespace

IdealPower dfh_exponent(const ConeIdealModel& model, const ConePoint& t) {
    require_same_theta(model, t);
    if (t.sign() < 0) throw NegativeT("exponent parameter must be >= 0");
    return {clamped(floor_conepoint(t.plus_one_plus_theta()))};
}

IdealPower jm_exponent(long m, const Int& q_m, const Rational& t) {
    if (m < 1) throw InvalidNumber("m must be >= 1");
    Rational arg = t + 1 + make_rational(q_m, Int(m));
    return {clamped(floor_int(arg))};
}

Int qm_psef(const ConeIdealModel& model, long m) {
    if (m < 1) throw InvalidNumber("m must be >= 1");
    if (model.theta.is_rational()) return ceil_int(Rational(m) * model.theta.rational_value());
    // Irrational: ceil(m*theta) = floor(m*theta) + 1.
    return floor_conepoint(model.point(Rational(0), Rational(m))) + 1;
}

QmReport qm_sequence_report(const ConeIdealModel& model, long max_m) {
    if (max_m < 2) throw InvalidNumber("sequence report needs M >= 2");
    QmReport rep;
    std::vector<Int> q(static_cast<size_t>(max_m) + 1);
    for (long m = 1; m <= max_m; ++m) {
        Int qm = qm_psef(model, m);
        q[static_cast<size_t>(m)] = qm;
        QmRow row;
        row.m = m;
        row.q_m = qm;
        row.ratio = make_rational(qm, Int(m));
        // sign of q_m - m*theta, exact.
        row.sign_vs_theta = model.point(Rational(qm), Rational(-m)).sign();
        rep.rows.push_back(row);
        if (row.sign_vs_theta < 0) {
            rep.ratio_above_theta = false;
            rep.violations.push_back("q_" + std::to_string(m) + "/" + std::to_string(m) + " < theta");
        }
        // |q_m/m - theta| < 1/m  <=>  q_m - m*theta < 1 (the lower bound is the check above).
        if (model.point(Rational(qm - 1), Rational(-m)).sign() >= 0) {
            rep.within_inverse_m = false;
            rep.violations.push_back("q_" + std::to_string(m) + "/" + std::to_string(m) +
                                     " not within 1/m of theta");
        }
    }
    for (long m = 1; m <= max_m; ++m)
        for (long n = m; m + n <= max_m; ++n)
            if (q[static_cast<size_t>(m + n)] > q[static_cast<size_t>(m)] + q[static_cast<size_t>(n)]) {
                rep.subadditive = false;
                rep.violations.push_back("q_{" + std::to_string(m + n) + "} > q_" + std::to_string(m) + " + q_" +
                                         std::to_string(n));
            }
    return rep;
}

IdealPower gamma_s_exponent(const Rational& s, const Rational& t) {
    if (sign(s) <= 0) throw InvalidNumber("boundary parameter s must be > 0");
    if (sign(t) < 0) throw NegativeT("exponent parameter must be >= 0");
    return {floor_int(s + 1 + t)};
}

IdealPower boundary_upper_exponent(const ConeIdealModel& model, const ConePoint& k, const ConePoint& t) {
    require_same_theta(model, k);
    require_same_theta(model, t);
    if (t.sign() < 0) throw NegativeT("exponent parameter must be >= 0");
    // k >= 1 + theta, exactly.
    if (ConePoint(k.u - 1, k.v - 1, k.theta).sign() < 0)
        throw KBelowThreshold("discrepancy coefficient k < 1 + theta");
    IdealPower out{clamped(floor_conepoint(ConePoint(k.u + t.u, k.v + t.v, k.theta)))};
    IdealPower dfh = dfh_exponent(model, t);
    if (out.exponent < dfh.exponent)
        throw Degenerate("upper bound fell below the multiplier exponent"); // precluded by k >= 1 + theta
    return out;
}

IdealPower boundary_upper_exponent(const ConeIdealModel& model, const Rational& k, const ConePoint& t) {
    return boundary_upper_exponent(model, model.rational_point(k), t);
}

std::vector<ConePoint> jumping_numbers(const ConeIdealModel& model, const Rational& lo, const Rational& hi) {
    if (sign(lo) < 0 || !(lo < hi)) throw InvalidNumber("need 0 <= lo < hi");
    // Jumps of max{0, floor(t+1+theta)} sit at t_j = j - 1 - theta for
    // integers j >= 1 (where the exponent steps from j-1 up to j).
    // Range filter: lo < t_j <= hi  <=>  lo + 1 + theta < j <= hi + 1 + theta.
    Int j_min = floor_conepoint(model.point(lo + 1, Rational(1))) + 1;
    Int j_max = floor_conepoint(model.point(hi + 1, Rational(1)));
    std::vector<ConePoint> out;
    Rational probe = make_rational(1, 1000000);
    for (Int j = std::max(j_min, Int(1)); j <= j_max; ++j) {
        ConePoint t(Rational(j - 1), Rational(-1), model.theta_ref);
        if (t.sign() < 0) continue; // guard for lo = 0 with negative-theta models
        IdealPower at = dfh_exponent(model, t);
        ConePoint left = t.shifted(-probe);
        if (left.sign() < 0) left = ConePoint(t.u / 2, t.v / 2, t.theta); // jump within probe of 0
        IdealPower before = dfh_exponent(model, left);
        if (at.exponent <= before.exponent)
            continue; // clamped at zero: the floor crossed an integer but the exponent did not move
        out.push_back(t);
    }
    return out;
}

bool skoda_translate_check(const ConeIdealModel& model, const ConePoint& t) {
    require_same_theta(model, t);
    if (ConePoint(t.u - model.r, t.v, t.theta).sign() < 0)
        throw TBelowR("translation check needs t >= r = " + std::to_string(model.r));
    IdealPower here = dfh_exponent(model, t);
    IdealPower prev = dfh_exponent(model, t.shifted(Rational(-1)));
    return here.exponent == prev.exponent + 1;
}

RigidityReport rigidity_window_check(const ConeIdealModel& model, const Rational& epsilon, long n,
                                     long samples) {
    if (model.theta.sign() < 0)
        throw HypothesisViolated("rigidity window needs theta = t0 (theta >= 0)");
    if (n < 0 || samples < 1) throw InvalidNumber("need n >= 0 and samples >= 1");
    // 0 < eps < kappa, exactly.
    if (sign(epsilon) <= 0 || ExactNumber::compare(ExactNumber(epsilon), model.kappa) >= 0)
        throw EpsilonOutOfRange("need 0 < eps < kappa");

    RigidityReport rep;
    rep.n = n;
    rep.epsilon = epsilon;
    rep.samples = samples;

    // Rational under-approximation kappa_lo <= kappa with kappa_lo > eps.
    Rational width = make_rational(1, 16);
    auto bracket = model.kappa.enclosure(width);
    while (!(bracket.first > epsilon)) {
        width /= 16;
        bracket = model.kappa.enclosure(width);
    }
    Rational reach_low = bracket.first - epsilon; // 0 < reach_low <= kappa - eps
    Int expected_low(n + 1), expected_high(n + 2);
    for (long i = 0; i <= samples; ++i) {
        Rational t = Rational(n) + reach_low * Rational(i) / Rational(samples);
        Int e = dfh_exponent(model, model.rational_point(t)).exponent;
        if (e != expected_low) {
            rep.lower_window_ok = false;
            rep.violations.push_back("exponent " + e.get_str() + " at t = " + to_string(t));
        }
    }

    // Symbolic left endpoint n + kappa.
    Int e_jump = dfh_exponent(model, model.jump_point(n)).exponent;
    if (e_jump != expected_high) {
        rep.endpoint_exact_ok = false;
        rep.violations.push_back("exponent " + e_jump.get_str() + " at the symbolic point n + kappa");
    }

    // Rational over-approximation kappa_hi >= kappa with kappa_hi < 1
    // (kappa < 1 requires theta > 0; for theta = 0 the upper window is the
    // single point n + 1).
    if (model.theta.sign() > 0) {
        width = make_rational(1, 16);
        bracket = model.kappa.enclosure(width);
        while (!(bracket.second < 1)) {
            width /= 16;
            bracket = model.kappa.enclosure(width);
        }
        Rational start = bracket.second;
        for (long i = 0; i <= samples; ++i) {
            Rational t = Rational(n) + start + (Rational(1) - start) * Rational(i) / Rational(samples);
            Int e = dfh_exponent(model, model.rational_point(t)).exponent;
            if (e != expected_high) {
                rep.upper_window_ok = false;
                rep.violations.push_back("exponent " + e.get_str() + " at t = " + to_string(t));
            }
        }
    } else {
        Int e = dfh_exponent(model, model.rational_point(Rational(n + 1))).exponent;
        if (e != expected_high) {
            rep.upper_window_ok = false;
            rep.violations.push_back("exponent " + e.get_str() + " at t = n + 1");
        }
    }
    return rep;
}

std::vector<Rational> rational_approx_kappa(const ConeIdealModel& model, long count, long p) {
    if (count < 1) throw InvalidNumber("count must be >= 1");
    if (p <= 2 || !is_prime(Int(p))) throw InvalidNumber("need a prime p > 2");
    std::vector<Rational> out;
    // s_i > t0 dyadic, strictly decreasing, s_i - t0 < 2^-i; then t_i = 1 - s_i.
    Rational prev_s;
    bool have_prev = false;
    for (long i = 1; i <= count; ++i) {
        Int pow2;
        mpz_mul_2exp(pow2.get_mpz_t(), Int(1).get_mpz_t(), static_cast<unsigned long>(i));
        Rational delta = make_rational(Int(1), pow2);
        if (have_prev) {
            // Keep strictly below the previous choice.
            Rational width = make_rational(1, 64);
            auto br = model.t0.enclosure(width);
            while (!(br.second < prev_s)) {
                width /= 16;
                br = model.t0.enclosure(width);
            }
            delta = std::min(delta, Rational(prev_s - br.second));
        }
        // Tight upper bracket of t0, then the next dyadic point above it.
        Rational width = delta / 8;
        auto br = model.t0.enclosure(width);
        Rational hi = br.second;
        if (model.t0.is_rational()) hi = model.t0.rational_value(); // dyadic step lands strictly above
        Int den(1);
        Rational step;
        do {
            den <<= 1;
            step = make_rational(Int(1), den);
        } while (step * 2 >= delta);
        Rational s = make_rational(floor_int(hi / step) + 1, Int(1)) * step;
        // s is dyadic, s > t0, s - t0 <= (hi - t0) + step < delta <= 2^-i.
        out.push_back(Rational(1) - s);
        prev_s = s;
        have_prev = true;
    }
    return out;
}

Int FrobeniusIndex::modulus() const {
    Int pb;
    mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), b);
    Int pc;
    mpz_pow_ui(pc.get_mpz_t(), p.get_mpz_t(), c);
    return pb * (pc - 1);
}

FrobeniusIndex frobenius_bc(const Int& d, const Int& p) {
    if (d < 1) throw InvalidNumber("d must be >= 1");
    if (p < 2 || !is_prime(p)) throw InvalidNumber("p must be prime");
    FrobeniusIndex idx;
    idx.p = p;
    idx.d = d;
    idx.b = (d == 1) ? 0 : padic_valuation(d, p);
    Int pb;
    mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), idx.b);
    Int rest = d / pb;
    idx.c = static_cast<unsigned long>(multiplicative_order(p, rest));
    return idx;
}

bool AllowedFractions::contains(const Rational& alpha) const {
    if (sign(alpha) < 0 || alpha >= 1) return false;
    return is_integer(Rational(alpha * Rational(modulus)));
}

std::vector<Rational> AllowedFractions::enumerate(long cap) const {
    std::vector<Rational> out;
    Int n = std::min(modulus, Int(cap));
    for (Int j = 0; j < n; ++j) out.push_back(make_rational(j, modulus));
    return out;
}

AllowedFractions allowed_fractions(const FrobeniusIndex& index) {
    AllowedFractions af{index, index.modulus()};
    if (af.modulus < 1) throw InvalidNumber("degenerate fraction modulus");
    return af;
}

} // namespace conejump
