#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "affsurf/region.hpp"
#include "affsurf/tensor.hpp"
#include "affsurf/tolerances.hpp"

namespace affsurf {

// Complete invariants of a rank-1 structure.
struct Rank1Invariants {
    double alpha = 0.0;
    int epsilon = 1;  // sign of rho on the non-degenerate direction
    bool is_symmetric = false;
    bool also_type_b = false;
};

enum class CanonicalVariant { def_plus, def_minus, indef1, indef2, indef_exceptional };

struct CanonicalFormA {
    CanonicalVariant variant = CanonicalVariant::def_plus;
    double x = 0.0;
    double y = 0.0;           // unused for indef_exceptional
    LinearMap2 witness;       // pullback of the input by witness equals `form`
    ChristoffelA form;        // the canonical symbol itself
};

enum class RegionPos { interior, boundary, cusp };

struct Rank2Invariants {
    SigClass sig = SigClass::plus;
    double psi3 = 0.0;
    double Psi3 = 0.0;
    double chi = 0.0;
    RegionPos region = RegionPos::interior;
    int iso_plus = 1;  // |G+(Gamma)|
    int iso_full = 1;  // |G(Gamma)|
};

enum class RankClass { flat, rank1, rank2 };

struct ClassificationA {
    RankClass rank = RankClass::flat;
    std::optional<Rank1Invariants> rank1;
    std::optional<Rank2Invariants> rank2;
    std::optional<CanonicalFormA> canonical;
};

// Dispatches on the rank of the Ricci tensor. Flat is a valid outcome; the
// rank-2 branch fills invariants, canonical form, region and isotropy.
ClassificationA classify_a(const ChristoffelA& g, const Tolerances& tol = {});

// Invariants (alpha, epsilon) of a rank-1 structure; throws rank_error
// otherwise.
Rank1Invariants rank1_invariants(const ChristoffelA& g, const Tolerances& tol = {});

// alpha evaluated from an explicit direction X with rho(X,X) != 0; used by
// the independence tests.
double rank1_alpha_from_direction(const ChristoffelA& g, double x1, double x2,
                                  const Tolerances& tol = {});

// Reduction of a definite structure to the normal form (x +/- 1/x, 0, 0, x, x, y):
// Ricci is normalized to +/-Id by a symmetric square root, the residual
// rotation angle is found by bracketing/bisection, axis signs are fixed so
// x > 0, y >= 0, and for positive signature the representative is moved into
// the fundamental domain. Throws signature_error unless rho is definite.
CanonicalFormA canonicalize_definite(const ChristoffelA& g, const Tolerances& tol = {});

// Reduction of an indefinite structure to one of the antidiagonal normal
// forms (xy > 1, xy < 1, or the exceptional xy = 1 branch).
CanonicalFormA canonicalize_indefinite(const ChristoffelA& g, const Tolerances& tol = {});

// Unique representative in the fundamental domain
// C = {0 <= x <= 1, 0 <= y <= Y_+(x)} of the positive-definite parameter
// point (x, y). Throws parameter_domain_error outside S = (0,inf) x [0,inf).
std::pair<double, double> fundamental_rep_plus(double x, double y, const Tolerances& tol = {});

// Number of distinct parameter points of S in the same orbit (1, 2 or 3).
int n_count(DefSign sig, double x, double y, const Tolerances& tol = {});

// Decides affine equivalence. Rank-2 pairs compare signature and
// (psi3, Psi3), plus chi when oriented; rank-1 pairs compare (epsilon, alpha);
// mixed ranks are inequivalent. Throws flat_input_error when either input is
// flat.
bool equivalent_a(const ChristoffelA& g1, const ChristoffelA& g2, bool oriented,
                  const Tolerances& tol = {});

// Explicit linear map with pullback_a(g1, w) == g2, when one can be
// constructed from the canonical forms (rank-2 inputs only).
std::optional<LinearMap2> linear_witness_a(const ChristoffelA& g1, const ChristoffelA& g2,
                                           const Tolerances& tol = {});

// Isotropy group orders (|G+|, |G|) of a rank-2 structure: (3,6) at the cusp
// class, (1,2) on the boundary of the invariant region, (1,1) inside.
std::pair<int, int> isotropy_orders_a(const ChristoffelA& g, const Tolerances& tol = {});

} // namespace affsurf
