#include "conejump/lattice.hpp"

#include <algorithm>

#include "conejump/numbertheory.hpp"
#include "conejump/polynomial.hpp"

namespace conejump {

namespace {

void check_same_lattice(const DivisorClass& D, const DivisorClass& E) {
    if (!D.lattice || !E.lattice) throw LatticeMismatch("class without lattice");
    if (!D.lattice->same_form(*E.lattice)) throw LatticeMismatch("classes on different intersection forms");
}

// gram == s * pattern for some positive rational s.
std::optional<Rational> proportionality(const Matrix& gram, const Matrix& pattern) {
    if (gram.size() != pattern.size()) return std::nullopt;
    Rational s(0);
    for (size_t i = 0; i < gram.size(); ++i) {
        if (gram[i].size() != pattern[i].size()) return std::nullopt;
        for (size_t j = 0; j < gram[i].size(); ++j) {
            if (sign(pattern[i][j]) == 0) {
                if (sign(gram[i][j]) != 0) return std::nullopt;
                continue;
            }
            Rational ratio = gram[i][j] / pattern[i][j];
            if (sign(s) == 0)
                s = ratio;
            else if (s != ratio)
                return std::nullopt;
        }
    }
    if (sign(s) <= 0) return std::nullopt;
    return s;
}

Matrix pattern_EE() {
    return {{Rational(0), Rational(1), Rational(1)},
            {Rational(1), Rational(0), Rational(1)},
            {Rational(1), Rational(1), Rational(0)}};
}

Matrix pattern_isogenous(long d) {
    return {{Rational(0), Rational(1), Rational(1)},
            {Rational(1), Rational(0), Rational(d)},
            {Rational(1), Rational(d), Rational(0)}};
}

} // namespace

GramLattice GramLattice::scaled(const Rational& factor) const {
    if (sign(factor) <= 0) throw InvalidNumber("lattice scale must be positive");
    GramLattice out = *this;
    for (auto& row : out.gram)
        for (auto& v : row) v *= factor;
    return out;
}

bool is_symmetric(const Matrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

GramLattice make_lattice(Matrix gram, std::vector<std::string> labels, bool require_ns_signature) {
    if (gram.empty()) throw InvalidNumber("empty Gram matrix");
    if (!is_symmetric(gram)) throw NotSymmetric("Gram matrix must be symmetric");
    if (labels.empty()) {
        for (size_t i = 0; i < gram.size(); ++i) labels.push_back("e" + std::to_string(i + 1));
    }
    if (labels.size() != gram.size()) throw InvalidNumber("label count does not match rank");
    GramLattice lat{std::move(gram), std::move(labels)};
    if (require_ns_signature) {
        auto [pos, neg] = signature(lat);
        if (pos != 1 || neg != static_cast<long>(lat.rank()) - 1)
            throw Degenerate("expected signature (1, rank-1), got (" + std::to_string(pos) + ", " +
                             std::to_string(neg) + ")");
    }
    return lat;
}

DivisorClass make_class(std::vector<Rational> coords, std::shared_ptr<const GramLattice> lattice) {
    if (!lattice) throw LatticeMismatch("null lattice");
    if (coords.size() != lattice->rank()) throw LatticeMismatch("coordinate length does not match rank");
    return DivisorClass{std::move(coords), std::move(lattice)};
}

DivisorClass make_class(std::vector<long> coords, std::shared_ptr<const GramLattice> lattice) {
    std::vector<Rational> c;
    c.reserve(coords.size());
    for (long v : coords) c.emplace_back(v);
    return make_class(std::move(c), std::move(lattice));
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    check_same_lattice(x, y);
    DivisorClass out = x;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y.coords[i];
    return out;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    check_same_lattice(x, y);
    DivisorClass out = x;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= y.coords[i];
    return out;
}

DivisorClass operator*(const Rational& c, const DivisorClass& x) {
    DivisorClass out = x;
    for (auto& v : out.coords) v *= c;
    return out;
}

Rational intersect(const DivisorClass& D, const DivisorClass& E) {
    check_same_lattice(D, E);
    const Matrix& g = D.lattice->gram;
    Rational acc(0);
    for (size_t i = 0; i < g.size(); ++i) {
        if (sign(D.coords[i]) == 0) continue;
        Rational row(0);
        for (size_t j = 0; j < g.size(); ++j) row += g[i][j] * E.coords[j];
        acc += D.coords[i] * row;
    }
    return acc;
}

std::string cone_kind_name(ConeKind kind) {
    switch (kind) {
        case ConeKind::AbelianEE: return "abelian-exe";
        case ConeKind::AbelianIsogenous: return "abelian-isogenous";
        case ConeKind::AbelianEg: return "abelian-eg";
        default: return "rank2-positive-cone";
    }
}

Matrix nef_matrix_EE(const DivisorClass& D) {
    if (!D.lattice || !proportionality(D.lattice->gram, pattern_EE()))
        throw WrongLatticeKind("nef_matrix_EE needs the rank-3 product table");
    const Rational &a = D.coords[0], &b = D.coords[1], &c = D.coords[2];
    return {{a + c, c}, {c, b + c}};
}

Rational matrix_det(const Matrix& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidNumber("matrix_det: not square");
    Matrix a = m;
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && sign(a[pivot][col]) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (sign(a[r][col]) == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c2 = col; c2 < n; ++c2) a[r][c2] -= f * a[col][c2];
        }
    }
    return det;
}

bool psd_test(const Matrix& S) {
    if (!is_symmetric(S)) throw NotSymmetric("psd_test needs a symmetric matrix");
    size_t n = S.size();
    if (n > 8) throw RankTooLarge("psd_test enumerates principal minors only up to rank 8");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        Matrix sub(idx.size(), std::vector<Rational>(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = S[idx[i]][idx[j]];
        if (sign(matrix_det(sub)) < 0) return false;
    }
    return true;
}

namespace {

Matrix eg_matrix_from_coords(const std::vector<Rational>& coords, long g) {
    size_t n = static_cast<size_t>(g);
    if (coords.size() != n * (n + 1) / 2)
        throw WrongLatticeKind("E^g class needs g(g+1)/2 coordinates");
    Matrix H(n, std::vector<Rational>(n, Rational(0)));
    // Layout: g fiber coefficients, then pair coefficients (i<j) row-major.
    size_t k = n;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            H[i][j] = H[j][i] = coords[k];
            ++k;
        }
    for (size_t i = 0; i < n; ++i) {
        H[i][i] = coords[i];
        for (size_t j = 0; j < n; ++j)
            if (j != i) H[i][i] += H[i][j];
    }
    return H;
}

} // namespace

bool is_psef(const DivisorClass& D, const ConeDescriptor& cone) {
    switch (cone.kind) {
        case ConeKind::AbelianEE: {
            return psd_test(nef_matrix_EE(D));
        }
        case ConeKind::AbelianIsogenous: {
            if (!D.lattice || !proportionality(D.lattice->gram, pattern_isogenous(cone.param)))
                throw WrongLatticeKind("isogenous test needs the rank-3 table with F2.Gamma = d");
            const Rational &x = D.coords[0], &y = D.coords[1], &z = D.coords[2];
            Rational d(cone.param);
            return sign(x + d * z) >= 0 && sign(y + z) >= 0 && sign(x * y + x * z + d * y * z) >= 0;
        }
        case ConeKind::AbelianEg: {
            return psd_test(eg_matrix_from_coords(D.coords, cone.param));
        }
        default: {
            if (sign(self_intersection(D)) < 0) return false;
            return sign(intersect(D, cone.witness_ample)) >= 0;
        }
    }
}

std::vector<DivisorClass> search_vectors(const std::shared_ptr<const GramLattice>& lattice,
                                         long target_square, long coeff_bound) {
    if (!lattice) throw LatticeMismatch("null lattice");
    size_t n = lattice->rank();
    if (n > 4) throw RankTooLarge("exhaustive vector search limited to rank 4");
    if (coeff_bound < 0) throw InvalidNumber("negative bound");
    std::vector<DivisorClass> found;
    std::vector<long> v(n, -coeff_bound);
    Rational target(target_square);
    while (true) {
        bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
        if (!(zero && target_square == 0)) {
            Rational sq(0);
            for (size_t i = 0; i < n; ++i) {
                if (v[i] == 0) continue;
                Rational row(0);
                for (size_t j = 0; j < n; ++j)
                    if (v[j] != 0) row += lattice->gram[i][j] * Rational(v[j]);
                sq += Rational(v[i]) * row;
            }
            if (sq == target) found.push_back(make_class(v, lattice));
        }
        size_t idx = 0;
        while (idx < n && ++v[idx] > coeff_bound) {
            v[idx] = -coeff_bound;
            ++idx;
        }
        if (idx == n) break;
    }
    return found;
}

NoVectorCertificate certificate_no_vectors(CertFamily family, long parameter, long target_square) {
    if (target_square != 0 && target_square != -2)
        throw HypothesisViolated("certificates exist for squares 0 and -2 only");
    NoVectorCertificate cert{family, parameter, target_square, "", "", {}};
    if (family == CertFamily::Nd) {
        long d = parameter;
        if (d <= 1 || d % 4 != 3) throw HypothesisViolated("Nd certificate needs squarefree d = 3 mod 4, d > 1");
        if (squarefree_decompose(Int(d)).first != 1) throw HypothesisViolated("Nd certificate needs squarefree d");
        if (target_square == -2) {
            cert.kind = "mod4";
            cert.statement = "v^2 = 2(a^2 - d b^2) = -2 needs a^2 + b^2 = 3 mod 4, impossible: squares are 0 or 1 mod 4";
            cert.data = {{"d mod 4", "3"}, {"a^2 mod 4", "0 or 1"}, {"b^2 mod 4", "0 or 1"}};
        } else {
            cert.kind = "nonsquare";
            Int sf = squarefree_decompose(Int(d)).second;
            cert.statement = "v^2 = 2(a^2 - d b^2) = 0 forces a^2 = d b^2; d is not a square, so b = 0 and then a = 0";
            cert.data = {{"d", std::to_string(d)}, {"squarefree part", sf.get_str()}};
        }
    } else {
        long m = parameter;
        if (m < 3) throw HypothesisViolated("Lambda certificate needs m >= 3");
        if (target_square == -2) {
            cert.kind = "div4";
            cert.statement = "v^2 = 4(a^2 + b^2 + m a b) is divisible by 4, never -2";
            cert.data = {{"v^2 mod 4", "0"}};
        } else {
            cert.kind = "pell";
            Int disc = Int(m) * Int(m) - 4;
            bool square = is_perfect_square(disc);
            if (square)
                throw HypothesisViolated("m^2 - 4 unexpectedly a perfect square"); // m = 2 only, excluded by m >= 3
            cert.statement =
                "a^2 + b^2 + m a b = 0 with b != 0 forces m^2 - 4 to be a square; (m-r)(m+r) = 4 forces m = 2, "
                "contradicting m >= 3";
            cert.data = {{"m^2-4", disc.get_str()}, {"perfect square", "no"}};
        }
    }
    return cert;
}

std::pair<long, long> signature(const GramLattice& lattice) {
    size_t n = lattice.rank();
    std::vector<std::vector<Poly>> xi_minus_g(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Poly entry = Poly::constant(-lattice.gram[i][j]);
            if (i == j) entry = entry + Poly::variable();
            xi_minus_g[i][j] = entry;
        }
    Poly chi = poly_matrix_det(xi_minus_g);
    if (sign(chi.coeff(0)) == 0) throw Degenerate("intersection form is degenerate");
    // Symmetric matrices have real spectra, so Descartes' rule is exact,
    // counting with multiplicity.
    auto variations = [](const Poly& p) {
        long v = 0;
        int prev = 0;
        for (const auto& c : p.coeffs()) {
            int s = sign(c);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    long pos = variations(chi);
    long neg = variations(chi.compose_affine(Rational(0), Rational(-1)));
    return {pos, neg};
}

std::shared_ptr<const GramLattice> lattice_product_EE() {
    return std::make_shared<GramLattice>(make_lattice(pattern_EE(), {"f1", "f2", "delta"}, true));
}

std::shared_ptr<const GramLattice> lattice_isogenous(long d) {
    if (d < 1) throw InvalidNumber("isogeny degree must be >= 1");
    return std::make_shared<GramLattice>(make_lattice(pattern_isogenous(d), {"F1", "F2", "Gamma"}, true));
}

std::shared_ptr<const GramLattice> lattice_rank2_diag(long a, long b) {
    Matrix g{{Rational(a), Rational(0)}, {Rational(0), Rational(b)}};
    return std::make_shared<GramLattice>(make_lattice(std::move(g), {"H", "F"}));
}

std::shared_ptr<const GramLattice> lattice_Nd(long d) {
    if (d <= 1) throw InvalidNumber("Nd needs d > 1");
    Matrix g{{Rational(2), Rational(0)}, {Rational(0), Rational(-2 * d)}};
    return std::make_shared<GramLattice>(make_lattice(std::move(g), {"H", "F"}, true));
}

std::shared_ptr<const GramLattice> lattice_Lambda(long m) {
    if (m < 3) throw InvalidNumber("Lambda needs m >= 3");
    Matrix g{{Rational(4), Rational(2 * m)}, {Rational(2 * m), Rational(4)}};
    return std::make_shared<GramLattice>(make_lattice(std::move(g), {"e1", "e2"}, true));
}

} // namespace conejump
