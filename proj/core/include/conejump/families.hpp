#ifndef CONEJUMP_FAMILIES_HPP
#define CONEJUMP_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conejump/coneideal.hpp"
#include "conejump/lattice.hpp"
#include "conejump/threshold.hpp"

namespace conejump {

struct MatrixPair {
    Matrix P, Q;
};

// One catalogue entry: lattice data of a polarized surface (or an E^g matrix
// pair), the classes L and M, the cone law, and the closed-form threshold it
// must reproduce. `needs_cover` marks the families whose cone is taken over
// the double cover (where the canonical class becomes the pullback of M).
struct FamilySpec {
    std::string name;
    std::string display;
    std::map<std::string, long> params;
    std::shared_ptr<const GramLattice> lattice; // null when sym_pair is used
    DivisorClass L, M;
    ConeDescriptor cone;
    std::optional<ExactNumber> expected_theta;
    std::optional<MatrixPair> sym_pair;
    std::optional<DivisorClass> canonical_class; // set after a cover: K = pullback of M
    bool k_psef = false;
    bool needs_cover = true;
    long cover_degree_applied = 1;
    long base_chi = 0;    // chi(O) of the base surface: 0 abelian, 2 K3
    long r_override = 0;  // 0: derive the generator count from the lattice data
    std::vector<NoVectorCertificate> certificates;
};

// Product of an elliptic curve with itself (no extra endomorphisms):
// L = 3(2 f1 + f2 + k delta), M = 3(f1 + f2). k >= 2.
FamilySpec family_EE(long k);

// Product of two isogenous curves, minimal isogeny degree d >= 1:
// L = F1 + 2 F2 + Gamma, M = F1 + F2.
FamilySpec family_isogenous(long d);

enum class RMVariant { Mod23, Mod1 };

// Simple abelian surface with real multiplication by Q(sqrt(d)).
// Mod23: d = 2,3 mod 4, Gram diag(2, -2d), L = n L0 + Lw, M = L0, n > sqrt(d).
// Mod1:  d = 1 mod 4, Gram [[2,1],[1,(1-d)/2]], L = n L0 + Linf, M = L0.
FamilySpec family_RM(long n, long d, RMVariant variant);

// K3 with NS = <2> + <-2d>, d squarefree = 3 mod 4: L = u H + F, M = H.
FamilySpec family_K3_Nd(long u, long d);

// K3 with NS = [[4, 2m], [2m, 4]], m >= 3: L = e1 + e2, M = e1.
FamilySpec family_K3_Lambda(long m);

// Product of CM elliptic curves (sixth-root-of-unity multiplication): rank-4
// table of fiber, diagonal and twisted-graph classes, L = F1+F2+Delta+Sigma,
// M = F1+F2, threshold (3+sqrt(3))/6.
FamilySpec family_CM();

// E^g with the positive definite pair from the degree-g construction;
// threshold of exact algebraic degree g.
FamilySpec family_Eg(long g, long a_search_bound = 50);

// Cone over (P^2, H) itself (no cover): theta = -3, rational.
FamilySpec family_P2();

// Double cover branched in |2M|: intersection numbers double, A = pullback
// of L, the canonical class becomes the pullback of M (so theta = t0), and
// the threshold is unchanged. Requires characteristic != 2 context.
FamilySpec double_cover(const FamilySpec& base, bool char_not_two = true);

// Quadratic route for surface data, generalized-eigenvalue route for E^g.
ThresholdResult compute_threshold(const FamilySpec& spec);

// Section count of the polarization on the (covered, rescaled) variety:
// the default generator count r of the vertex ideal.
long default_generator_count(const FamilySpec& spec, long rescale = 1);

// Full pipeline: cover when the family asks for it, normalize to t0 < 1,
// derive r, and package the exponent-function model.
ConeIdealModel model_from_family(const FamilySpec& spec);

struct VerifyReport {
    std::string family;
    ThresholdResult base_threshold;
    bool matches_expected = true;
    bool irrational = false;
    bool not_q_gorenstein = false;
    std::string irrationality_reason;
    long normalization_scale = 1;
    bool normalized_in_unit_interval = false;
    std::string theta_decimal;
    ExactNumber kappa_normalized;
    std::vector<ExactNumber> jump_preview; // kappa, 1+kappa, 2+kappa
    bool cover_invariance_ok = true;
    std::vector<NoVectorCertificate> certificates;
    long generator_count = 0;
    bool pass = true;
};

// Recomputes the threshold, matches it against the closed form (throwing
// ExpectedMismatch on any difference), certifies irrationality, checks cover
// invariance, and reports the normalized jumping-number preview.
VerifyReport verify_family(const FamilySpec& spec, int digits = 30);

// The named default instances (regression set).
std::vector<FamilySpec> catalogue();

} // namespace conejump

#endif
