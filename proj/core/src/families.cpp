#include "conejump/families.hpp"

#include <algorithm>

#include "conejump/numbertheory.hpp"

namespace conejump {

namespace {

std::vector<std::pair<std::string, DivisorClass>> basis_classes(
    const std::shared_ptr<const GramLattice>& lattice) {
    std::vector<std::pair<std::string, DivisorClass>> out;
    for (size_t i = 0; i < lattice->rank(); ++i) {
        std::vector<long> e(lattice->rank(), 0);
        e[i] = 1;
        out.emplace_back(lattice->labels[i], make_class(e, lattice));
    }
    return out;
}

ExactNumber closed_form(long num_a, long num_b, long radicand, long den) {
    return ExactNumber::quadratic(make_rational(num_a, den), make_rational(num_b, den), Int(radicand));
}

void require_squarefree(long d) {
    if (squarefree_decompose(Int(d)).first != 1)
        throw HypothesisViolated("d = " + std::to_string(d) + " is not squarefree");
}

} // namespace

FamilySpec family_EE(long k) {
    if (k < 2) throw HypothesisViolated("product family needs k >= 2");
    FamilySpec f;
    f.name = "ee";
    f.display = "ee(k=" + std::to_string(k) + ")";
    f.params = {{"k", k}};
    f.lattice = lattice_product_EE();
    f.L = make_class(std::vector<long>{6, 3, 3 * k}, f.lattice);      // 3(2 f1 + f2 + k delta)
    f.M = make_class(std::vector<long>{3, 3, 0}, f.lattice);          // 3(f1 + f2)
    f.cone = ConeDescriptor{ConeKind::AbelianEE, 0, f.M, basis_classes(f.lattice)};
    f.expected_theta = closed_form(2 * k + 3, 1, 4 * k * k + 1, 2 * (3 * k + 2));
    f.base_chi = 0;
    return f;
}

FamilySpec family_isogenous(long d) {
    if (d < 1) throw HypothesisViolated("isogeny degree must be >= 1");
    FamilySpec f;
    f.name = "isog";
    f.display = "isog(d=" + std::to_string(d) + ")";
    f.params = {{"d", d}};
    f.lattice = lattice_isogenous(d);
    f.L = make_class(std::vector<long>{1, 2, 1}, f.lattice);
    f.M = make_class(std::vector<long>{1, 1, 0}, f.lattice);
    f.cone = ConeDescriptor{ConeKind::AbelianIsogenous, d, f.M, basis_classes(f.lattice)};
    f.expected_theta = closed_form(d + 4, 1, d * d + 4, 2 * (2 * d + 3));
    f.base_chi = 0;
    return f;
}

FamilySpec family_RM(long n, long d, RMVariant variant) {
    if (d <= 1) throw HypothesisViolated("real multiplication needs squarefree d > 1");
    require_squarefree(d);
    FamilySpec f;
    f.name = "rm";
    f.params = {{"n", n}, {"d", d}};
    f.base_chi = 0;
    if (variant == RMVariant::Mod23) {
        if (d % 4 != 2 && d % 4 != 3) throw HypothesisViolated("variant mod23 needs d = 2,3 mod 4");
        if (n * n <= d) throw HypothesisViolated("need n > sqrt(d)");
        f.display = "rm(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
        f.lattice = lattice_rank2_diag(2, -2 * d);
        f.L = make_class(std::vector<long>{n, 1}, f.lattice);
        f.M = make_class(std::vector<long>{1, 0}, f.lattice);
        // 1/(n - sqrt(d)) = (n + sqrt(d)) / (n^2 - d)
        f.expected_theta = closed_form(n, 1, d, n * n - d);
    } else {
        if (d % 4 != 1) throw HypothesisViolated("variant mod1 needs d = 1 mod 4");
        if ((2 * n + 1) * (2 * n + 1) <= d) throw HypothesisViolated("need (2n+1)^2 > d");
        f.display = "rm1(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
        Matrix gram{{Rational(2), Rational(1)}, {Rational(1), make_rational(1 - d, 2)}};
        f.lattice = std::make_shared<GramLattice>(make_lattice(std::move(gram), {"L0", "Linf"}, true));
        f.L = make_class(std::vector<long>{n, 1}, f.lattice);
        f.M = make_class(std::vector<long>{1, 0}, f.lattice);
        f.expected_theta = closed_form(2 * (2 * n + 1), 2, d, 4 * n * n + 4 * n + 1 - d);
    }
    f.cone = ConeDescriptor{ConeKind::Rank2PositiveCone, 0, f.M, {}};
    return f;
}

FamilySpec family_K3_Nd(long u, long d) {
    if (d <= 1 || d % 4 != 3) throw HypothesisViolated("K3 family needs squarefree d = 3 mod 4");
    require_squarefree(d);
    if (u * u <= d) throw HypothesisViolated("need u > sqrt(d)");
    FamilySpec f;
    f.name = "k3-nd";
    f.display = "k3-nd(u=" + std::to_string(u) + ",d=" + std::to_string(d) + ")";
    f.params = {{"u", u}, {"d", d}};
    f.lattice = lattice_Nd(d);
    f.L = make_class(std::vector<long>{u, 1}, f.lattice);
    f.M = make_class(std::vector<long>{1, 0}, f.lattice);
    f.cone = ConeDescriptor{ConeKind::Rank2PositiveCone, 0, f.M, {}};
    f.expected_theta = closed_form(u, 1, d, u * u - d);
    f.base_chi = 2;
    f.certificates.push_back(certificate_no_vectors(CertFamily::Nd, d, -2));
    f.certificates.push_back(certificate_no_vectors(CertFamily::Nd, d, 0));
    return f;
}

FamilySpec family_K3_Lambda(long m) {
    if (m < 3) throw HypothesisViolated("Lambda family needs m >= 3");
    FamilySpec f;
    f.name = "k3-lambda";
    f.display = "k3-lambda(m=" + std::to_string(m) + ")";
    f.params = {{"m", m}};
    f.lattice = lattice_Lambda(m);
    f.L = make_class(std::vector<long>{1, 1}, f.lattice);
    f.M = make_class(std::vector<long>{1, 0}, f.lattice);
    f.cone = ConeDescriptor{ConeKind::Rank2PositiveCone, 0, f.M, {}};
    f.expected_theta = closed_form(m + 2, 1, m * m - 4, 2 * (m + 2));
    f.base_chi = 2;
    f.certificates.push_back(certificate_no_vectors(CertFamily::Lambda, m, -2));
    f.certificates.push_back(certificate_no_vectors(CertFamily::Lambda, m, 0));
    return f;
}

FamilySpec family_CM() {
    FamilySpec f;
    f.name = "cm";
    f.display = "cm";
    // Fibers, diagonal, and the graph of a sixth-root-of-unity multiplication:
    // all four classes are elliptic curves of square zero meeting pairwise
    // once. Signature (1,3).
    Matrix gram(4, std::vector<Rational>(4, Rational(1)));
    for (size_t i = 0; i < 4; ++i) gram[i][i] = Rational(0);
    f.lattice = std::make_shared<GramLattice>(
        make_lattice(std::move(gram), {"F1", "F2", "Delta", "Sigma"}, true));
    f.L = make_class(std::vector<long>{1, 1, 1, 1}, f.lattice);
    f.M = make_class(std::vector<long>{1, 1, 0, 0}, f.lattice);
    f.cone = ConeDescriptor{ConeKind::Rank2PositiveCone, 0, f.M, basis_classes(f.lattice)};
    f.expected_theta = closed_form(3, 1, 3, 6);
    f.base_chi = 0;
    return f;
}

FamilySpec family_Eg(long g, long a_search_bound) {
    DegreeGConstruction built = construct_degree_g(g, a_search_bound);
    FamilySpec f;
    f.name = "eg";
    f.display = "eg(g=" + std::to_string(g) + ")";
    f.params = {{"g", g}, {"a0", built.a0}, {"c", built.c}, {"n", built.n}};
    f.sym_pair = MatrixPair{built.P, built.Q};
    // Coordinate container for the sym-matrix cone: g fiber coefficients,
    // then the pairwise coefficients.
    size_t rank = static_cast<size_t>(g) * (static_cast<size_t>(g) + 1) / 2;
    Matrix id(rank, std::vector<Rational>(rank, Rational(0)));
    std::vector<std::string> labels;
    for (size_t i = 0; i < rank; ++i) id[i][i] = Rational(1);
    for (long i = 1; i <= g; ++i) labels.push_back("a" + std::to_string(i));
    for (long i = 1; i <= g; ++i)
        for (long j = i + 1; j <= g; ++j) labels.push_back("c" + std::to_string(i) + std::to_string(j));
    f.lattice = std::make_shared<GramLattice>(make_lattice(std::move(id), std::move(labels)));
    std::vector<long> witness(rank, 0);
    for (long i = 0; i < g; ++i) witness[static_cast<size_t>(i)] = built.n; // diag(n) = P
    f.L = make_class(witness, f.lattice);
    f.M = f.L;
    f.cone = ConeDescriptor{ConeKind::AbelianEg, g, f.L, {}};
    f.expected_theta = built.result.theta;
    f.base_chi = 0;
    return f;
}

FamilySpec family_P2() {
    FamilySpec f;
    f.name = "p2";
    f.display = "p2";
    Matrix gram{{Rational(1)}};
    f.lattice = std::make_shared<GramLattice>(make_lattice(std::move(gram), {"H"}));
    f.L = make_class(std::vector<long>{1}, f.lattice);
    f.M = make_class(std::vector<long>{-3}, f.lattice); // the canonical class itself
    f.canonical_class = f.M;
    f.cone = ConeDescriptor{ConeKind::Rank2PositiveCone, 0, f.L, {}};
    f.expected_theta = ExactNumber(Rational(-3));
    f.needs_cover = false;
    f.k_psef = false;
    f.r_override = 3;
    return f;
}

FamilySpec double_cover(const FamilySpec& base, bool char_not_two) {
    if (!char_not_two) throw HypothesisViolated("double cover needs characteristic != 2");
    FamilySpec f = base;
    f.display = base.display + "+cover";
    f.needs_cover = false;
    f.k_psef = true; // K = pullback of the ample M
    f.cover_degree_applied = base.cover_degree_applied * 2;
    if (f.lattice && !f.sym_pair) {
        auto scaled = std::make_shared<GramLattice>(f.lattice->scaled(Rational(2)));
        f.lattice = scaled;
        auto remap = [&](const DivisorClass& c) { return make_class(c.coords, scaled); };
        f.L = remap(f.L);
        f.M = remap(f.M);
        f.cone.witness_ample = remap(f.cone.witness_ample);
        for (auto& [label, cls] : f.cone.boundary_classes) cls = remap(cls);
    }
    f.canonical_class = f.M;
    return f;
}

ThresholdResult compute_threshold(const FamilySpec& spec) {
    if (spec.sym_pair) return threshold_gen_eig(spec.sym_pair->P, spec.sym_pair->Q);
    return threshold_quadratic(spec.L, spec.M, spec.cone);
}

long default_generator_count(const FamilySpec& spec, long rescale) {
    if (spec.r_override > 0) return spec.r_override;
    Rational s(rescale);
    Rational r_val;
    if (spec.sym_pair) {
        // h0 on the double cover of E^g: det(P) + det(P - Q).
        const Matrix& P = spec.sym_pair->P;
        const Matrix& Q = spec.sym_pair->Q;
        Matrix PmQ = P;
        for (size_t i = 0; i < P.size(); ++i)
            for (size_t j = 0; j < P.size(); ++j) PmQ[i][j] -= Q[i][j];
        r_val = matrix_det(P) + matrix_det(PmQ);
    } else {
        // Cone over the double cover W of the base surface, polarized by
        // s*A with A the pullback of L: A^2 = 2 L^2, A.K_W = 2 L.M, and
        // chi(O_W) = 2 chi(O_base) + M^2/2, so
        // h0(sA) = chi(O_W) + s^2 L^2 - s L.M  (Riemann-Roch + vanishing).
        // Intersection numbers here are taken on the base table, so undo any
        // cover scaling already applied to the stored Gram matrix.
        Rational c(spec.cover_degree_applied);
        Rational L2 = self_intersection(spec.L) / c;
        Rational LM = intersect(spec.L, spec.M) / c;
        Rational M2 = self_intersection(spec.M) / c;
        Rational chi_W = Rational(2 * spec.base_chi) + M2 / 2;
        r_val = chi_W + s * s * L2 - s * LM;
    }
    if (!is_integer(r_val) || sign(r_val) <= 0)
        throw Degenerate("derived generator count is not a positive integer: " + to_string(r_val));
    return static_cast<long>(floor_int(r_val).get_si());
}

ConeIdealModel model_from_family(const FamilySpec& spec) {
    FamilySpec coned = spec.needs_cover ? double_cover(spec) : spec;
    ThresholdResult th = compute_threshold(coned).normalized_copy();
    long r = coned.r_override > 0 ? coned.r_override
                                  : default_generator_count(coned, th.normalization_scale);
    return make_model(th, r, coned.k_psef);
}

VerifyReport verify_family(const FamilySpec& spec, int digits) {
    VerifyReport rep;
    rep.family = spec.display;
    rep.base_threshold = compute_threshold(spec);
    rep.certificates = spec.certificates;

    if (spec.expected_theta) {
        rep.matches_expected = ExactNumber::compare(rep.base_threshold.theta, *spec.expected_theta) == 0;
        if (!rep.matches_expected)
            throw ExpectedMismatch(spec.display + ": computed " + rep.base_threshold.theta.to_string() +
                                   " != expected " + spec.expected_theta->to_string());
    }

    rep.irrational = rep.base_threshold.irrational;
    rep.not_q_gorenstein = rep.irrational;
    switch (rep.base_threshold.theta.kind()) {
        case ExactNumber::Kind::Rational:
            rep.irrationality_reason = "rational threshold";
            break;
        case ExactNumber::Kind::Quadratic:
            rep.irrationality_reason =
                "radicand " + rep.base_threshold.theta.quadratic_value().d.get_str() +
                " is squarefree > 1, not a perfect square";
            break;
        default:
            rep.irrationality_reason =
                "irreducible minimal polynomial of degree " + std::to_string(rep.base_threshold.degree);
    }
    rep.theta_decimal = rep.base_threshold.theta.decimal(digits);

    // Cover invariance: the double cover leaves theta unchanged.
    if (!spec.sym_pair) {
        FamilySpec covered = double_cover(spec.needs_cover ? spec : spec, true);
        ThresholdResult th_cover = compute_threshold(covered);
        rep.cover_invariance_ok = ExactNumber::compare(th_cover.theta, rep.base_threshold.theta) == 0;
    }

    ConeIdealModel model = model_from_family(spec);
    ThresholdResult norm = compute_threshold(spec.needs_cover ? double_cover(spec) : spec).normalized_copy();
    rep.normalization_scale = norm.normalization_scale;
    rep.normalized_in_unit_interval = model.normalized || model.theta.sign() <= 0;
    rep.kappa_normalized = model.kappa;
    rep.generator_count = model.r;
    for (long n = 0; n < 3; ++n) rep.jump_preview.push_back(model.kappa.affine(Rational(n), Rational(1)));

    rep.pass = rep.matches_expected && rep.cover_invariance_ok &&
               (!rep.irrational || rep.normalized_in_unit_interval);
    return rep;
}

std::vector<FamilySpec> catalogue() {
    std::vector<FamilySpec> out;
    out.push_back(family_EE(2));
    out.push_back(family_EE(3));
    out.push_back(family_isogenous(1));
    out.push_back(family_isogenous(2));
    out.push_back(family_RM(3, 2, RMVariant::Mod23));
    out.push_back(family_RM(2, 5, RMVariant::Mod1));
    out.push_back(family_K3_Nd(2, 3));
    out.push_back(family_K3_Nd(4, 3));
    out.push_back(family_K3_Lambda(3));
    out.push_back(family_K3_Lambda(4));
    out.push_back(family_CM());
    out.push_back(family_P2());
    out.push_back(family_Eg(2));
    out.push_back(family_Eg(3));
    return out;
}

} // namespace conejump
