#ifndef CONEJUMP_LATTICE_HPP
#define CONEJUMP_LATTICE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conejump/rational.hpp"

namespace conejump {

using Matrix = std::vector<std::vector<Rational>>;

// Intersection form of a surface in a fixed basis. NS-flagged lattices are
// checked for signature (1, rank-1) on construction.
struct GramLattice {
    Matrix gram;
    std::vector<std::string> labels;

    size_t rank() const { return gram.size(); }
    GramLattice scaled(const Rational& factor) const;
    bool same_form(const GramLattice& other) const { return gram == other.gram; }
};

GramLattice make_lattice(Matrix gram, std::vector<std::string> labels, bool require_ns_signature = false);

struct DivisorClass {
    std::vector<Rational> coords;
    std::shared_ptr<const GramLattice> lattice;
};

DivisorClass make_class(std::vector<Rational> coords, std::shared_ptr<const GramLattice> lattice);
DivisorClass make_class(std::vector<long> coords, std::shared_ptr<const GramLattice> lattice);

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator*(const Rational& c, const DivisorClass& x);

// D . E through the Gram form. Throws LatticeMismatch when the classes live
// in different forms.
Rational intersect(const DivisorClass& D, const DivisorClass& E);
inline Rational self_intersection(const DivisorClass& D) { return intersect(D, D); }

enum class ConeKind { AbelianEE, AbelianIsogenous, AbelianEg, Rank2PositiveCone };

// Which pseudo-effective test applies, together with an ample witness class
// selecting the positive-cone component. `boundary_classes` lists classes of
// irreducible curves (fibers, graphs) whose pairing with a nef divisor must
// be nonnegative; threshold computations verify these side conditions.
struct ConeDescriptor {
    ConeKind kind;
    long param = 0; // isogeny degree d, or g for the E^g matrix cone
    DivisorClass witness_ample;
    std::vector<std::pair<std::string, DivisorClass>> boundary_classes;
};

std::string cone_kind_name(ConeKind kind);

// The symmetric 2x2 matrix [[a+c, c], [c, b+c]] attached to a class
// a f1 + b f2 + c delta on the product-of-elliptic-curves table; satisfies
// D^2 = 2 det. Throws WrongLatticeKind off that table.
Matrix nef_matrix_EE(const DivisorClass& D);

// All principal minors >= 0, exact. Matrices up to rank 8.
bool psd_test(const Matrix& S);

// Exact determinant of a rational matrix.
Rational matrix_det(const Matrix& m);

bool is_symmetric(const Matrix& m);

// Pseudo-effective membership for the supported cone laws. Rational inputs
// only; exact verdict.
bool is_psef(const DivisorClass& D, const ConeDescriptor& cone);

// Exhaustive box search: all integer vectors v with |coords| <= coeff_bound
// and v^2 = target_square (the zero vector is excluded when the target is 0).
// Rank at most 4.
std::vector<DivisorClass> search_vectors(const std::shared_ptr<const GramLattice>& lattice,
                                         long target_square, long coeff_bound);

enum class CertFamily { Nd, Lambda };

// Structured nonexistence proof for square-0 / square-(-2) vectors in the
// document's two rank-2 lattice families.
struct NoVectorCertificate {
    CertFamily family;
    long parameter;     // d or m
    long target_square; // 0 or -2
    std::string kind;   // "mod4", "nonsquare", "div4", "pell"
    std::string statement;
    std::vector<std::pair<std::string, std::string>> data;
};

NoVectorCertificate certificate_no_vectors(CertFamily family, long parameter, long target_square);

// Exact inertia (positive, negative) of a nondegenerate symmetric form, via
// Descartes' rule on the characteristic polynomial (all roots real).
std::pair<long, long> signature(const GramLattice& lattice);

// Prebuilt Gram tables.
std::shared_ptr<const GramLattice> lattice_product_EE();              // f1, f2, delta
std::shared_ptr<const GramLattice> lattice_isogenous(long d);         // F1, F2, Gamma
std::shared_ptr<const GramLattice> lattice_rank2_diag(long a, long b); // diag(a, b)
std::shared_ptr<const GramLattice> lattice_Nd(long d);                // diag(2, -2d)
std::shared_ptr<const GramLattice> lattice_Lambda(long m);            // [[4, 2m], [2m, 4]]

} // namespace conejump

#endif
