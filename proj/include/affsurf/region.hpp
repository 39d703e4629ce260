#pragma once

#include <optional>
#include <utility>

#include "affsurf/tensor.hpp"
#include "affsurf/tolerances.hpp"

namespace affsurf {

// Definiteness sign for the parametrized families Gamma_+/Gamma_-.
enum class DefSign { plus, minus };

// Signature class of a rank-2 Ricci tensor.
enum class SigClass { plus, zero, minus };

struct InvariantPoint {
    double p = 0.0;  // psi3
    double P = 0.0;  // Psi3
};

// Boundary curves of the invariant image, defined for t > 0:
//   sigma_+(t) = (4t^2 + 1/t^2 + 2, 4t^4 + 4t^2 + 2)
//   sigma_-(t) = (-4t^2 - 1/t^2 + 2, 4t^4 - 4t^2 + 2)   (cusp at t = 1/sqrt 2)
InvariantPoint sigma_plus(double t);
InvariantPoint sigma_minus(double t);

// Jacobian determinant of (psi3, Psi3) along the definite families.
double jacobian_det(DefSign sig, double x, double y);

// Upper branch of the Jacobi locus: y = Y_-(x) on (0,1), y = Y_+(x) on (0,1].
// Returns nullopt outside the domain.
std::optional<double> jacobi_locus_y(DefSign sig, double x);

// Discriminant locus y = 2 sqrt(1 - x^2) for 0 < x <= 1.
double discriminant_y(double x);

// Residual-rotation parameters. Absent optionals encode "no solution".
struct UPair {
    std::optional<double> u_plus;
    std::optional<double> u_minus;
};
UPair u_pm(DefSign sig, double x, double y, const Tolerances& tol = {});

// Partner point (raw, possibly negative coordinates) induced by a residual
// rotation parameter u on the family Gamma_sig(x, y).
std::pair<double, double> partner_from_u(DefSign sig, double x, double y, double u);

enum class RegionWhich { C_minus, C_zero, C_plus };
enum class RegionPosition { interior, on_sigma_plus, on_sigma_minus, cusp, outside_all };

struct RegionTag {
    RegionWhich which = RegionWhich::C_zero;
    RegionPosition position = RegionPosition::interior;
};

// Euclidean distance from (p, P) to the given boundary curve.
double distance_to_sigma(DefSign sig, double p, double P);

// Locates (p, P) relative to the three closed regions bounded by sigma_+/-.
RegionTag region_classify(double p, double P, const Tolerances& tol = {});

// True when (p, P) lies on the boundary of the closed region of the given
// signature class, within the band invariant_tol * (1 + |(p,P)|).
bool on_region_boundary(SigClass sig, double p, double P, const Tolerances& tol = {});

// True when (p, P) is within the boundary band of the cusp point (-2, 1).
bool at_cusp_point(double p, double P, const Tolerances& tol = {});

} // namespace affsurf
