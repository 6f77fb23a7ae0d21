#ifndef CONEJUMP_THRESHOLD_HPP
#define CONEJUMP_THRESHOLD_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "conejump/exact_number.hpp"
#include "conejump/lattice.hpp"

namespace conejump {

// Pairing of theta*L - M against a declared boundary curve class.
struct BoundaryCheck {
    std::string label;
    ExactNumber value;
    int sign;
};

// theta(W, A) with the derived quantities every exponent formula needs.
struct ThresholdResult {
    ExactNumber theta;
    ExactNumber t0;    // max(theta, 0)
    ExactNumber kappa; // 1 - t0
    bool irrational = false;
    int degree = 1;
    bool degree_certified = true;
    std::vector<BoundaryCheck> boundary_checks;
    // Coefficients (L^2, L.M, M^2) when the threshold came from a quadratic;
    // they scale under finite covers.
    std::optional<std::array<Rational, 3>> quadratic_data;
    // Veronese rescale applied so that t0 < 1 (1 = untouched).
    long normalization_scale = 1;
    bool normalized = false; // 0 < t0 < 1 holds

    // Minimal rescale theta -> theta/s with s integer and theta/s < 1.
    ThresholdResult normalized_copy() const;
};

ThresholdResult make_threshold_result(ExactNumber theta);

// Larger root of (tL - M)^2 = 0 on a surface whose pseudo-effective cone is
// cut out by the descriptor; verifies the boundary-class side conditions and
// throws SideConditionFailed when a pairing is negative at theta.
ThresholdResult threshold_quadratic(const DivisorClass& L, const DivisorClass& M,
                                    const ConeDescriptor& cone);

// Largest generalized eigenvalue of the pair (Q, P): the largest real root
// of det(Q - lambda P), with P positive definite. Result carries the
// squarefree minimal polynomial and an isolating interval above all other
// roots.
ThresholdResult threshold_gen_eig(const Matrix& P, const Matrix& Q);

// Recurrence polynomials R_0 = 1, R_1 = x, R_n = x R_{n-1} - R_{n-2}
// (rescaled Chebyshev, characteristic polynomials of tridiagonal matrices).
using RecurrencePoly = Poly;
RecurrencePoly chebyshev_R(long n);

// The tridiagonal matrix with 0-diagonal, 1 off-diagonals and lower-right
// corner entry a.
Matrix tridiag_matrix(long g, const Rational& a);

// Characteristic polynomial R_g - a R_{g-1} of tridiag_matrix(g, a).
Poly tridiag_charpoly(long g, const Rational& a);

// Exact irreducibility over Q for primitive integer polynomials of degree
// 1..6 (rational-root theorem, mod-p certificate, bounded factor search).
bool is_irreducible_Q(const Poly& p);

struct DegreeGConstruction {
    long g = 0;
    long a0 = 0; // corner entry making R_g - a0 R_{g-1} irreducible
    long c = 0;  // diagonal shift making Q positive definite
    long n = 0;  // scale with n > lambda_max(Q)
    Matrix P, Q;
    ThresholdResult result; // theta = lambda_max(Q)/n, algebraic degree g
};

// Scans a0 = 1, -1, 2, -2, ... up to a_search_bound for an irreducible
// specialization, then shifts and scales by certified Gershgorin bounds so
// that 0 < theta < 1 with algebraic degree exactly g. 2 <= g <= 6.
DegreeGConstruction construct_degree_g(long g, long a_search_bound = 50);

// Threshold invariance under a finite cover: intersection numbers scale by
// the degree, the threshold does not. Recomputes and asserts exact equality.
ThresholdResult pullback_threshold(const ThresholdResult& result, long cover_degree);

} // namespace conejump

#endif
