#pragma once

#include <array>
#include <cmath>

#include "affsurf/tolerances.hpp"

namespace affsurf {

enum class Family { A, B };

// Plain 2x2 value matrix used for tensors (Ricci, contractions, ...).
struct Mat2 {
    double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;

    double operator()(int i, int j) const {
        return i == 0 ? (j == 0 ? m11 : m12) : (j == 0 ? m21 : m22);
    }
    double det() const { return m11 * m22 - m12 * m21; }
    double max_abs() const {
        return std::max(std::max(std::abs(m11), std::abs(m12)),
                        std::max(std::abs(m21), std::abs(m22)));
    }
    Mat2 sym() const { return {m11, 0.5 * (m12 + m21), 0.5 * (m12 + m21), m22}; }
    bool is_finite() const {
        return std::isfinite(m11) && std::isfinite(m12) && std::isfinite(m21) && std::isfinite(m22);
    }
};

// Eigenvalues of the symmetric part, descending. Closed form, exact for 2x2.
std::array<double, 2> sym_eigenvalues(const Mat2& s);
// Unit eigenvector of a symmetric matrix for the given eigenvalue.
std::array<double, 2> sym_eigenvector(const Mat2& s, double lambda);

// Invertible linear coordinate change acting on structures by pullback.
// Column i of the matrix holds the i-th new frame vector in the old frame.
struct LinearMap2 {
    double a11 = 1.0, a12 = 0.0, a21 = 0.0, a22 = 1.0;

    double det() const { return a11 * a22 - a12 * a21; }
    LinearMap2 inverse() const;
    double operator()(int i, int j) const {
        return i == 0 ? (j == 0 ? a11 : a12) : (j == 0 ? a21 : a22);
    }
    bool is_finite() const {
        return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22);
    }

    static LinearMap2 identity() { return {}; }
    static LinearMap2 rotation(double theta) {
        const double c = std::cos(theta), s = std::sin(theta);
        return {c, -s, s, c};
    }
    static LinearMap2 diagonal(double a, double b) { return {a, 0.0, 0.0, b}; }
};

// Matrix product; pullback is contravariant with respect to it:
// pullback_a(g, s * t) == pullback_a(pullback_a(g, s), t).
LinearMap2 operator*(const LinearMap2& s, const LinearMap2& t);

// Torsion-free constant-coefficient symbol, stored in the display order
// (g_11^1, g_11^2, g_12^1, g_12^2, g_22^1, g_22^2) with g_12 = g_21.
struct ChristoffelA {
    double g111 = 0.0, g112 = 0.0, g121 = 0.0, g122 = 0.0, g221 = 0.0, g222 = 0.0;

    // Zero-based tensor accessor, symmetric in the two lower indices.
    double operator()(int i, int j, int k) const;

    std::array<double, 6> to_array() const { return {g111, g112, g121, g122, g221, g222}; }
    static ChristoffelA from_array(const std::array<double, 6>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5]};
    }
    double max_abs() const;
    bool is_finite() const;

    // Definite normal forms: g = (x +/- 1/x, 0, 0, x, x, y), Ricci = +/-Id.
    static ChristoffelA def_plus(double x, double y);
    static ChristoffelA def_minus(double x, double y);
    // Indefinite normal forms, Ricci = antidiag(1,1).
    static ChristoffelA indef1(double x, double y);    // xy > 1
    static ChristoffelA indef2(double x, double y);    // xy < 1
    // The order-3 isotropy structure at invariant point (-2, 1).
    static ChristoffelA cusp();
};

enum class SignatureTag { positive, negative, indefinite, rank1_positive, rank1_negative, zero };

struct RicciData {
    double r11 = 0.0, r12 = 0.0, r21 = 0.0, r22 = 0.0;
    int rank = 0;
    SignatureTag signature = SignatureTag::zero;

    Mat2 matrix() const { return {r11, r12, r21, r22}; }
    double det() const { return r11 * r22 - r12 * r21; }
    double max_abs() const { return matrix().max_abs(); }
};

// Classifies an arbitrary 2x2 matrix as a Ricci tensor (rank/signature tags
// from the eigenvalues of its symmetric part).
RicciData classify_ricci_matrix(const Mat2& rho, const Tolerances& tol = {});

// Ricci tensor of a constant-coefficient structure, closed form. Always
// exactly symmetric.
RicciData ricci_type_a(const ChristoffelA& g, const Tolerances& tol = {});

// Ricci tensor evaluated from the curvature operator by index contraction.
// Family B interprets the symbol as the coefficient array of (x^1)^{-1} C and
// includes the derivative terms, evaluated at x^1 = 1; the result is the
// (x^1)^{-2} coefficient matrix and need not be symmetric.
RicciData ricci_oracle(const ChristoffelA& g, Family family, const Tolerances& tol = {});

// Pullback (T^*g)_ij^k under an invertible linear map. Throws
// invalid_map_error when |det| <= zero_tol.
ChristoffelA pullback_a(const ChristoffelA& g, const LinearMap2& t, const Tolerances& tol = {});

// Covariant derivative of the Ricci tensor; [i][j][k] holds (nabla rho)(d_i, d_j; d_k).
using NablaRho = std::array<std::array<std::array<double, 2>, 2>, 2>;
NablaRho nabla_rho(const ChristoffelA& g);

// rho3_ij = g_ik^l g_jl^k; always exactly symmetric.
Mat2 rho3(const ChristoffelA& g);

// Scalar invariants of rank-2 structures. Throw rank_error when the Ricci
// tensor is degenerate.
double psi3(const ChristoffelA& g, const Tolerances& tol = {});
double Psi3(const ChristoffelA& g, const Tolerances& tol = {});

// Orientation-sensitive invariant: with u_a = g_ab^b, v_l = rho^{ij} g_ij^k rho3_kl,
// chi = (u_1 v_2 - u_2 v_1) |det rho|^{1/2} / det rho. Flips sign under
// orientation-reversing pullbacks.
double chi(const ChristoffelA& g, const Tolerances& tol = {});

} // namespace affsurf
