#include "affsurf/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace affsurf {

std::array<double, 2> sym_eigenvalues(const Mat2& m) {
    const Mat2 s = m.sym();
    const double tr = s.m11 + s.m22;
    const double disc = std::hypot(s.m11 - s.m22, 2.0 * s.m12);
    return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

std::array<double, 2> sym_eigenvector(const Mat2& m, double lambda) {
    const Mat2 s = m.sym();
    // Rows of (s - lambda I) are orthogonal to the eigenvector; take the
    // larger one for stability.
    const double r1x = s.m11 - lambda, r1y = s.m12;
    const double r2x = s.m12, r2y = s.m22 - lambda;
    double vx, vy;
    if (std::hypot(r1x, r1y) >= std::hypot(r2x, r2y)) {
        vx = -r1y;
        vy = r1x;
    } else {
        vx = -r2y;
        vy = r2x;
    }
    double n = std::hypot(vx, vy);
    if (n == 0.0) return {1.0, 0.0};  // lambda is a double eigenvalue
    if (vx < 0.0 || (vx == 0.0 && vy < 0.0)) n = -n;
    return {vx / n, vy / n};
}

LinearMap2 LinearMap2::inverse() const {
    const double d = det();
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

LinearMap2 operator*(const LinearMap2& s, const LinearMap2& t) {
    return {s.a11 * t.a11 + s.a12 * t.a21, s.a11 * t.a12 + s.a12 * t.a22,
            s.a21 * t.a11 + s.a22 * t.a21, s.a21 * t.a12 + s.a22 * t.a22};
}

double ChristoffelA::operator()(int i, int j, int k) const {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 0) return k == 0 ? g111 : g112;
    if (i == 0 && j == 1) return k == 0 ? g121 : g122;
    return k == 0 ? g221 : g222;
}

double ChristoffelA::max_abs() const {
    double m = 0.0;
    for (double v : to_array()) m = std::max(m, std::abs(v));
    return m;
}

bool ChristoffelA::is_finite() const {
    for (double v : to_array())
        if (!std::isfinite(v)) return false;
    return true;
}

ChristoffelA ChristoffelA::def_plus(double x, double y) {
    return {x + 1.0 / x, 0.0, 0.0, x, x, y};
}

ChristoffelA ChristoffelA::def_minus(double x, double y) {
    return {x - 1.0 / x, 0.0, 0.0, x, x, y};
}

ChristoffelA ChristoffelA::indef1(double x, double y) {
    const double r = std::sqrt(x * y - 1.0);
    return {x, r, y, x, r, y};
}

ChristoffelA ChristoffelA::indef2(double x, double y) {
    const double r = std::sqrt(1.0 - x * y);
    return {x, r, y, x, -r, y};
}

ChristoffelA ChristoffelA::cusp() {
    const double s = 1.0 / std::sqrt(2.0);
    return {-s, 0.0, 0.0, s, s, 0.0};
}

RicciData classify_ricci_matrix(const Mat2& rho, const Tolerances& tol) {
    RicciData out;
    out.r11 = rho.m11;
    out.r12 = rho.m12;
    out.r21 = rho.m21;
    out.r22 = rho.m22;
    const auto ev = sym_eigenvalues(rho);
    const double scale = std::max(1.0, std::hypot(ev[0], ev[1]));
    const double cut = tol.rank_tol * scale;
    const bool nz0 = std::abs(ev[0]) > cut;
    const bool nz1 = std::abs(ev[1]) > cut;
    out.rank = (nz0 ? 1 : 0) + (nz1 ? 1 : 0);
    if (out.rank == 2) {
        if (ev[0] > 0.0 && ev[1] > 0.0)
            out.signature = SignatureTag::positive;
        else if (ev[0] < 0.0 && ev[1] < 0.0)
            out.signature = SignatureTag::negative;
        else
            out.signature = SignatureTag::indefinite;
    } else if (out.rank == 1) {
        const double lead = nz0 ? ev[0] : ev[1];
        out.signature = lead > 0.0 ? SignatureTag::rank1_positive : SignatureTag::rank1_negative;
    } else {
        out.signature = SignatureTag::zero;
    }
    return out;
}

RicciData ricci_type_a(const ChristoffelA& g, const Tolerances& tol) {
    Mat2 rho;
    rho.m11 = g.g122 * (g.g111 - g.g122) + g.g112 * (g.g222 - g.g121);
    rho.m12 = g.g121 * g.g122 - g.g112 * g.g221;
    rho.m21 = rho.m12;
    rho.m22 = g.g221 * (g.g111 - g.g122) + g.g121 * (g.g222 - g.g121);
    return classify_ricci_matrix(rho, tol);
}

RicciData ricci_oracle(const ChristoffelA& g, Family family, const Tolerances& tol) {
    Mat2 rho;
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            double v = 0.0;
            // trace of the quadratic curvature terms
            for (int m = 0; m < 2; ++m) {
                double tr = 0.0;
                for (int l = 0; l < 2; ++l) tr += g(l, m, l);
                v += g(j, k, m) * tr;
            }
            for (int l = 0; l < 2; ++l)
                for (int m = 0; m < 2; ++m) v -= g(l, k, m) * g(j, m, l);
            if (family == Family::B) {
                // d/dx^1 of C/x^1 at x^1 = 1
                v -= g(j, k, 0);
                if (j == 0)
                    for (int l = 0; l < 2; ++l) v += g(l, k, l);
            }
            if (j == 0 && k == 0) rho.m11 = v;
            if (j == 0 && k == 1) rho.m12 = v;
            if (j == 1 && k == 0) rho.m21 = v;
            if (j == 1 && k == 1) rho.m22 = v;
        }
    }
    return classify_ricci_matrix(rho, tol);
}

ChristoffelA pullback_a(const ChristoffelA& g, const LinearMap2& t, const Tolerances& tol) {
    if (!t.is_finite() || std::abs(t.det()) <= tol.zero_tol)
        throw invalid_map_error("pullback_a: map is singular within zero tolerance");
    const LinearMap2 w = t.inverse();
    auto component = [&](int i, int j, int k) {
        double v = 0.0;
        for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n)
                for (int l = 0; l < 2; ++l) v += t(m, i) * t(n, j) * w(k, l) * g(m, n, l);
        return v;
    };
    ChristoffelA out;
    out.g111 = component(0, 0, 0);
    out.g112 = component(0, 0, 1);
    out.g121 = component(0, 1, 0);
    out.g122 = component(0, 1, 1);
    out.g221 = component(1, 1, 0);
    out.g222 = component(1, 1, 1);
    return out;
}

NablaRho nabla_rho(const ChristoffelA& g) {
    const RicciData rd = ricci_type_a(g);
    const Mat2 rho = rd.matrix();
    NablaRho out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                double v = 0.0;
                for (int l = 0; l < 2; ++l) v -= g(k, i, l) * rho(l, j) + g(k, j, l) * rho(i, l);
                out[i][j][k] = v;
            }
    return out;
}

Mat2 rho3(const ChristoffelA& g) {
    auto entry = [&](int i, int j) {
        double v = 0.0;
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) v += g(i, k, l) * g(j, l, k);
        return v;
    };
    Mat2 out;
    out.m11 = entry(0, 0);
    out.m12 = entry(0, 1);
    out.m21 = out.m12;
    out.m22 = entry(1, 1);
    return out;
}

namespace {

Mat2 ricci_inverse_or_throw(const ChristoffelA& g, const Tolerances& tol, const char* who) {
    const RicciData rd = ricci_type_a(g, tol);
    if (rd.rank != 2) throw rank_error(std::string(who) + ": Ricci tensor is rank-deficient");
    const Mat2 rho = rd.matrix();
    const double d = rho.det();
    return {rho.m22 / d, -rho.m12 / d, -rho.m21 / d, rho.m11 / d};
}

} // namespace

double psi3(const ChristoffelA& g, const Tolerances& tol) {
    const Mat2 inv = ricci_inverse_or_throw(g, tol, "psi3");
    const Mat2 r3 = rho3(g);
    double v = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v += inv(i, j) * r3(i, j);
    return v;
}

double Psi3(const ChristoffelA& g, const Tolerances& tol) {
    const RicciData rd = ricci_type_a(g, tol);
    if (rd.rank != 2) throw rank_error("Psi3: Ricci tensor is rank-deficient");
    return rho3(g).det() / rd.det();
}

double chi(const ChristoffelA& g, const Tolerances& tol) {
    const RicciData rd = ricci_type_a(g, tol);
    if (rd.rank != 2) throw rank_error("chi: Ricci tensor is rank-deficient");
    const Mat2 rho = rd.matrix();
    const double d = rho.det();
    const Mat2 inv{rho.m22 / d, -rho.m12 / d, -rho.m21 / d, rho.m11 / d};
    const Mat2 r3 = rho3(g);

    double u[2];
    for (int a = 0; a < 2; ++a) {
        u[a] = 0.0;
        for (int b = 0; b < 2; ++b) u[a] += g(a, b, b);
    }
    double v[2];
    for (int l = 0; l < 2; ++l) {
        v[l] = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) v[l] += inv(i, j) * g(i, j, k) * r3(k, l);
    }
    // coefficient of dx^1 ^ dx^2 in u_a v_l dx^a ^ dx^l, paired with dvol
    return (u[0] * v[1] - u[1] * v[0]) * std::sqrt(std::abs(d)) / d;
}

} // namespace affsurf
