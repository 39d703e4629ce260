#pragma once

#include <array>
#include <optional>
#include <utility>

#include "affsurf/tensor.hpp"
#include "affsurf/tolerances.hpp"

namespace affsurf {

// Coefficient array C of a structure with symbols (x^1)^{-1} C on x^1 > 0,
// stored in the same display order as ChristoffelA.
struct TypeBSymbol {
    double c111 = 0.0, c112 = 0.0, c121 = 0.0, c122 = 0.0, c221 = 0.0, c222 = 0.0;

    double operator()(int i, int j, int k) const {
        return as_christoffel()(i, j, k);
    }
    ChristoffelA as_christoffel() const { return {c111, c112, c121, c122, c221, c222}; }
    static TypeBSymbol from_christoffel(const ChristoffelA& g) {
        return {g.g111, g.g112, g.g121, g.g122, g.g221, g.g222};
    }
    std::array<double, 6> to_array() const { return {c111, c112, c121, c122, c221, c222}; }
    static TypeBSymbol from_array(const std::array<double, 6>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5]};
    }
    double max_abs() const { return as_christoffel().max_abs(); }
    bool is_finite() const { return as_christoffel().is_finite(); }
};

// Element of the shear/scale group (x^1, x^2) -> (x^1, b x^1 + c x^2), with
// an optional pre-composed orientation flip (x^1, x^2) -> (x^1, -x^2).
struct GaugeTransform {
    double b = 0.0;
    double c = 1.0;
    bool flip = false;

    double effective_c() const { return flip ? -c : c; }
    bool in_positive() const { return effective_c() > 0.0; }

    // Canonical representation with positive stored c.
    static GaugeTransform from_effective(double b, double c_eff) {
        if (c_eff > 0.0) return {b, c_eff, false};
        return {b, -c_eff, true};
    }
    static GaugeTransform identity() { return {}; }
    static GaugeTransform flipped() { return {0.0, 1.0, true}; }
};

// Group composition matching map composition: applying `s` after `t` equals
// applying compose(t, s) once (pullbacks compose contravariantly).
GaugeTransform compose(const GaugeTransform& t, const GaugeTransform& s);
GaugeTransform inverse(const GaugeTransform& t);

// Action of the gauge group on coefficient arrays.
TypeBSymbol pullback_b(const TypeBSymbol& c, const GaugeTransform& t, const Tolerances& tol = {});

// Orientation-reversing generator applied to a symbol.
TypeBSymbol flip_b(const TypeBSymbol& c);

// Invariantly defined tensors, reported as coefficient arrays at x^1 = 1.
// x1_power records the attached power of x^1 carried by each tensor field.
struct InvariantTensorsB {
    std::array<double, 2> rho0{};                        // x1_power -1
    Mat2 rho1;                                           // x1_power -2
    Mat2 rho2;                                           // x1_power -2
    Mat2 rho3;                                           // x1_power -2, symmetric
    std::array<std::array<std::array<double, 2>, 2>, 2> rho4{};  // x1_power -3
    static constexpr int x1_power_rho0 = -1;
    static constexpr int x1_power_rho1 = -2;
    static constexpr int x1_power_rho2 = -2;
    static constexpr int x1_power_rho3 = -2;
    static constexpr int x1_power_rho4 = -3;
};
InvariantTensorsB invariant_tensors_b(const TypeBSymbol& c);

// Ricci coefficient matrix rho1 + rho2 - rho3 (implicit (x^1)^{-2} factor);
// generally non-symmetric.
RicciData ricci_b(const TypeBSymbol& c, const Tolerances& tol = {});

enum class MembershipB { flat, kappa_four, z23b };

// Flat when the Ricci tensor vanishes; kappa_four when non-flat with
// (C_12^1, C_22^1, C_22^2) = 0 (the structures that are also translation
// invariant); z23b otherwise.
MembershipB membership_b(const TypeBSymbol& c, const Tolerances& tol = {});

// Flat orbit representatives K_+/-(b, c) for c > 0; K(sign, 0, 1) = P^{+/-}.
TypeBSymbol k_pm(int sign, double b, double c);

// When a flat symbol has (C_12^1, C_22^1, C_22^2) != 0 it must lie on one of
// the flat orbits; returns the matching (sign, b, c) if so.
std::optional<std::tuple<int, double, double>> flat_orbit_parameters(const TypeBSymbol& c,
                                                                     const Tolerances& tol = {});

enum class ChartName { o0_plus, o0_minus, o1_plus, o1_minus, o3_plus, o3_minus };

struct ChartAssignment {
    ChartName chart = ChartName::o0_plus;
    std::array<double, 4> z{};
    GaugeTransform gauge;      // the unique positive gauge realizing the normalization
    TypeBSymbol normalized;    // pullback_b(input, gauge)
};

// Canonical chart coordinates with priority o0 > o1 > o3. Throws
// membership_error unless the symbol is a z23b member.
ChartAssignment chart_assign(const TypeBSymbol& c, const Tolerances& tol = {});

// Solves t^* c1 = c2 over the gauge group by component elimination; oriented
// mode restricts to positive gauges. Absent result certifies inequivalence.
std::optional<GaugeTransform> equivalent_b(const TypeBSymbol& c1, const TypeBSymbol& c2,
                                           bool oriented, const Tolerances& tol = {});

// True when some orientation-reversing gauge fixes the symbol.
bool amphichiral_b(const TypeBSymbol& c, const Tolerances& tol = {});

// (|isotropy in positive gauges|, |isotropy|) = (1, 1) or (1, 2).
std::pair<int, int> isotropy_b(const TypeBSymbol& c, const Tolerances& tol = {});

} // namespace affsurf
