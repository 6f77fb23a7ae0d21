#include "conejump/threshold.hpp"

#include <algorithm>

#include "conejump/numbertheory.hpp"

namespace conejump {

ThresholdResult make_threshold_result(ExactNumber theta) {
    ThresholdResult out;
    out.theta = theta;
    out.t0 = theta.sign() > 0 ? theta : ExactNumber(Rational(0));
    out.kappa = out.t0.affine(Rational(1), Rational(-1));
    out.irrational = theta.is_irrational();
    out.degree = theta.algebraic_degree();
    out.degree_certified = theta.degree_certified();
    out.normalized = out.t0.sign() > 0 && ExactNumber::compare(out.t0, ExactNumber(1L)) < 0;
    return out;
}

ThresholdResult ThresholdResult::normalized_copy() const {
    if (ExactNumber::compare(theta, ExactNumber(1L)) < 0) return *this;
    Int scale = theta.floor() + 1; // minimal integer above theta
    ThresholdResult out = make_threshold_result(theta.affine(Rational(0), make_rational(Int(1), scale)));
    out.boundary_checks = boundary_checks;
    out.quadratic_data = quadratic_data;
    out.normalization_scale = static_cast<long>(scale.get_si()) * normalization_scale;
    return out;
}

namespace {

ThresholdResult quadratic_threshold_from_numbers(const Rational& L2, const Rational& LM, const Rational& M2) {
    // (tL - M)^2 = L^2 t^2 - 2 (L.M) t + M^2.
    ExactNumber theta = quadratic_larger_root(L2, Rational(-2) * LM, M2);
    ThresholdResult out = make_threshold_result(theta);
    out.quadratic_data = {{L2, LM, M2}};
    return out;
}

} // namespace

ThresholdResult threshold_quadratic(const DivisorClass& L, const DivisorClass& M,
                                    const ConeDescriptor& cone) {
    Rational L2 = self_intersection(L);
    if (sign(L2) <= 0) throw NotAmple("L^2 <= 0");
    if (sign(intersect(L, cone.witness_ample)) <= 0) throw NotAmple("L pairs nonpositively with the ample witness");
    if (!is_psef(L, cone)) throw NotAmple("L is not in the pseudo-effective cone");
    Rational M2 = self_intersection(M);
    if (sign(M2) <= 0) throw NotAmple("M^2 <= 0");
    Rational LM = intersect(L, M);

    ThresholdResult out = quadratic_threshold_from_numbers(L2, LM, M2);

    // Side conditions: theta*L - M must pair nonnegatively with every declared
    // boundary curve class and with the ample witness.
    auto check = [&](const std::string& label, const DivisorClass& f) {
        Rational Lf = intersect(L, f), Mf = intersect(M, f);
        ExactNumber value = out.theta.affine(-Mf, Lf); // theta*(L.f) - (M.f)
        int s = value.sign();
        out.boundary_checks.push_back({label, value, s});
        if (s < 0)
            throw SideConditionFailed("pairing with " + label + " is negative at theta = " + out.theta.decimal(12) +
                                      "; the quadratic root is not the threshold");
    };
    for (const auto& [label, cls] : cone.boundary_classes) check(label, cls);
    check("ample-witness", cone.witness_ample);
    return out;
}

ThresholdResult threshold_gen_eig(const Matrix& P, const Matrix& Q) {
    if (!is_symmetric(P) || !is_symmetric(Q)) throw NotSymmetric("generalized eigenvalue pair must be symmetric");
    if (P.size() != Q.size()) throw LatticeMismatch("P and Q sizes differ");
    size_t n = P.size();
    // Positive definiteness: PSD plus strictly positive leading minors.
    if (!psd_test(P)) throw PNotPositiveDefinite("P is not positive semidefinite");
    for (size_t k = 1; k <= n; ++k) {
        Matrix lead(k, std::vector<Rational>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead[i][j] = P[i][j];
        if (sign(matrix_det(lead)) <= 0) throw PNotPositiveDefinite("leading minor of P vanishes");
    }

    std::vector<std::vector<Poly>> qlp(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) qlp[i][j] = Poly({Q[i][j], -P[i][j]});
    Poly chi = poly_matrix_det(qlp);

    IsolatedRoots roots = isolate_real_roots(chi);
    // Largest real root: the rightmost candidate among exact rational roots
    // and irrational isolating intervals.
    std::optional<ExactNumber> best;
    if (!roots.rational.empty()) best = ExactNumber(roots.rational.back());
    if (!roots.intervals.empty()) {
        auto [lo, hi] = roots.intervals.back();
        ExactNumber alg = ExactNumber::algebraic(chi, lo, hi);
        if (!best || ExactNumber::compare(alg, *best) > 0) best = alg;
    }
    if (!best) throw Degenerate("det(Q - lambda P) has no real roots"); // unreachable for symmetric pairs
    return make_threshold_result(*best);
}

RecurrencePoly chebyshev_R(long n) {
    if (n < 0) throw InvalidNumber("recurrence index must be >= 0");
    Poly prev = Poly::constant(Rational(1));
    if (n == 0) return prev;
    Poly cur = Poly::variable();
    for (long i = 2; i <= n; ++i) {
        Poly next = Poly::variable() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Matrix tridiag_matrix(long g, const Rational& a) {
    if (g < 1) throw InvalidNumber("tridiagonal size must be >= 1");
    size_t n = static_cast<size_t>(g);
    Matrix T(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i + 1 < n; ++i) T[i][i + 1] = T[i + 1][i] = Rational(1);
    T[n - 1][n - 1] = a;
    return T;
}

Poly tridiag_charpoly(long g, const Rational& a) {
    if (g < 2) throw InvalidNumber("tridiag_charpoly needs g >= 2");
    return chebyshev_R(g) - chebyshev_R(g - 1) * a;
}

bool is_irreducible_Q(const Poly& p) {
    if (p.is_zero() || p.degree() < 1) throw InvalidNumber("irreducibility needs degree >= 1");
    if (p.degree() > 6) throw DegreeTooLarge("irreducibility test limited to degree 6");
    return poly_is_irreducible(p.primitive());
}

DegreeGConstruction construct_degree_g(long g, long a_search_bound) {
    if (g < 2 || g > 6) throw InvalidNumber("construction supports 2 <= g <= 6");
    if (a_search_bound < 1) throw InvalidNumber("search bound must be >= 1");

    std::optional<long> found;
    for (long mag = 1; mag <= a_search_bound && !found; ++mag) {
        for (long a0 : {mag, -mag}) {
            Poly spec = tridiag_charpoly(g, Rational(a0));
            if (is_irreducible_Q(spec)) {
                found = a0;
                break;
            }
        }
    }
    if (!found) throw SearchExhausted("no irreducible specialization with |a0| <= " + std::to_string(a_search_bound));

    DegreeGConstruction out;
    out.g = g;
    out.a0 = *found;
    long abs_a0 = std::abs(out.a0);
    // Gershgorin: spec(T_g(a0)) lies in [-(2+|a0|), 2+|a0|].
    out.c = abs_a0 + 3;              // makes Q = T + cI positive definite (smallest eigenvalue >= 1)
    out.n = 2 * out.c + 2 * abs_a0 + 5; // strictly above lambda_max(Q) <= c + 2 + |a0|

    out.Q = tridiag_matrix(g, Rational(out.a0));
    for (size_t i = 0; i < out.Q.size(); ++i) out.Q[i][i] += Rational(out.c);
    out.P = Matrix(static_cast<size_t>(g), std::vector<Rational>(static_cast<size_t>(g), Rational(0)));
    for (size_t i = 0; i < out.P.size(); ++i) out.P[i][i] = Rational(out.n);

    out.result = threshold_gen_eig(out.P, out.Q);
    if (out.result.theta.sign() <= 0 || ExactNumber::compare(out.result.theta, ExactNumber(1L)) >= 0)
        throw Degenerate("constructed threshold escaped (0, 1)"); // Gershgorin precludes this
    if (out.result.degree != g || !out.result.degree_certified)
        throw Degenerate("constructed threshold has wrong degree"); // irreducibility precludes this
    return out;
}

ThresholdResult pullback_threshold(const ThresholdResult& result, long cover_degree) {
    if (cover_degree < 1) throw InvalidNumber("cover degree must be >= 1");
    if (!result.quadratic_data) return result; // matrix-pair thresholds are scale-free already
    const auto& [L2, LM, M2] = *result.quadratic_data;
    Rational k(cover_degree);
    ThresholdResult pulled = quadratic_threshold_from_numbers(k * L2, k * LM, k * M2);
    if (ExactNumber::compare(pulled.theta, result.theta) != 0)
        throw Degenerate("threshold not invariant under cover scaling"); // scale invariance of the root
    pulled.boundary_checks = result.boundary_checks;
    pulled.normalization_scale = result.normalization_scale;
    pulled.normalized = result.normalized;
    return pulled;
}

} // namespace conejump
