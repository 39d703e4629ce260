#include "affsurf/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace affsurf {

InvariantPoint sigma_plus(double t) {
    if (!(t > 0.0)) throw parameter_domain_error("sigma_plus: t must be positive");
    const double t2 = t * t;
    return {4.0 * t2 + 1.0 / t2 + 2.0, 4.0 * t2 * t2 + 4.0 * t2 + 2.0};
}

InvariantPoint sigma_minus(double t) {
    if (!(t > 0.0)) throw parameter_domain_error("sigma_minus: t must be positive");
    const double t2 = t * t;
    return {-4.0 * t2 - 1.0 / t2 + 2.0, 4.0 * t2 * t2 - 4.0 * t2 + 2.0};
}

double jacobian_det(DefSign sig, double x, double y) {
    if (!(x > 0.0)) throw parameter_domain_error("jacobian_det: x must be positive");
    const double x2 = x * x, x4 = x2 * x2, x6 = x4 * x2, y2 = y * y, x5 = x4 * x;
    if (sig == DefSign::minus)
        return 4.0 * (x2 + 1.0) * y * (4.0 * x6 + x4 * y2 - x2 * (y2 + 3.0) + 1.0) / x5;
    return -4.0 * (x2 - 1.0) * y * (4.0 * x6 + x4 * y2 + x2 * (y2 - 3.0) - 1.0) / x5;
}

std::optional<double> jacobi_locus_y(DefSign sig, double x) {
    const double x2 = x * x, x4 = x2 * x2, x6 = x4 * x2;
    if (sig == DefSign::minus) {
        if (!(x > 0.0) || !(x < 1.0)) return std::nullopt;
        double r = (1.0 + 4.0 * x6 - 3.0 * x2) / (x2 - x4);
        if (r < 0.0) {
            if (r < -1e-12) return std::nullopt;
            r = 0.0;
        }
        return std::sqrt(r);
    }
    if (!(x > 0.0) || !(x <= 1.0)) return std::nullopt;
    double r = (-4.0 * x6 + 3.0 * x2 + 1.0) / (x4 + x2);
    if (r < 0.0) {
        if (r < -1e-12) return std::nullopt;
        r = 0.0;
    }
    return std::sqrt(r);
}

double discriminant_y(double x) {
    if (!(x > 0.0) || !(x <= 1.0))
        throw parameter_domain_error("discriminant_y: requires 0 < x <= 1");
    return 2.0 * std::sqrt(1.0 - x * x);
}

UPair u_pm(DefSign sig, double x, double y, const Tolerances& tol) {
    if (!(x > 0.0)) throw parameter_domain_error("u_pm: x must be positive");
    UPair out;
    if (sig == DefSign::minus) {
        const double q = 2.0 * (1.0 + x * x);
        const double root = std::sqrt(2.0 * q + y * y);
        out.u_plus = x * (-y + root) / q;
        out.u_minus = x * (-y - root) / q;
        return out;
    }
    const double band = tol.zero_tol * (1.0 + x * x + y * y);
    const bool x_is_one = std::abs(x - 1.0) <= band;
    if (x_is_one) {
        if (y > band) out.u_plus = x / y;  // single residual rotation
        return out;                        // (1, 0): none
    }
    const double disc = y * y + 4.0 * (x * x - 1.0);
    if (disc < -band) return out;
    const double q = 2.0 * (x * x - 1.0);
    if (std::abs(disc) <= band) {
        out.u_plus = -y * x / q;  // double root on the discriminant locus
        return out;
    }
    const double root = std::sqrt(disc);
    out.u_plus = x * (-y + root) / q;
    out.u_minus = x * (-y - root) / q;
    return out;
}

std::pair<double, double> partner_from_u(DefSign sig, double x, double y, double u) {
    const double n = std::sqrt(1.0 + u * u);
    const LinearMap2 rot{u / n, -1.0 / n, 1.0 / n, u / n};
    const ChristoffelA g =
        sig == DefSign::plus ? ChristoffelA::def_plus(x, y) : ChristoffelA::def_minus(x, y);
    const ChristoffelA h = pullback_a(g, rot);
    return {h.g221, h.g222};
}

namespace {

// P-values of the two curve branches over a vertical line, where defined.
// sigma_+ lives over p >= 6, sigma_- over p <= -2; both solve
// 4 u^2 - |p - 2| u + 1 = 0 for u = t^2.
struct BranchRange {
    bool defined = false;
    double lo = 0.0, hi = 0.0;
};

BranchRange branch_range(DefSign sig, double p) {
    BranchRange out;
    const double b = sig == DefSign::plus ? p - 2.0 : 2.0 - p;
    const double disc = b * b - 16.0;
    if (b < 4.0 || disc < 0.0) return out;
    const double root = std::sqrt(disc);
    const double u1 = (b + root) / 8.0;
    const double u2 = (b - root) / 8.0;
    const double s = sig == DefSign::plus ? 4.0 : -4.0;
    const double P1 = 4.0 * u1 * u1 + s * u1 + 2.0;
    const double P2 = 4.0 * u2 * u2 + s * u2 + 2.0;
    out.defined = true;
    out.lo = std::min(P1, P2);
    out.hi = std::max(P1, P2);
    return out;
}

double curve_dist2(DefSign sig, double t, double p, double P) {
    const InvariantPoint q = sig == DefSign::plus ? sigma_plus(t) : sigma_minus(t);
    const double dp = q.p - p, dP = q.P - P;
    return dp * dp + dP * dP;
}

// Eliminating the curve parameter, both boundary curves satisfy one cubic:
// with u = +/-(P-1)/(p+2), the constraint 4u^2 +/- 4u + 2 - P = 0 becomes
//   F(p, P) = 4 (P-1)^2 + 4 (P-1)(p+2) + (2-P)(p+2)^2 = 0,
// whose real zero set is exactly sigma_+ (p >= 6) union sigma_- (p <= -2).
double sigma_implicit(double p, double P) {
    const double a = P - 1.0, b = p + 2.0;
    return 4.0 * a * a + 4.0 * a * b + (2.0 - P) * b * b;
}

double sigma_implicit_grad(double p, double P) {
    const double a = P - 1.0, b = p + 2.0;
    const double fp = 4.0 * a + 2.0 * b * (2.0 - P);
    const double fP = 8.0 * a + 4.0 * b - b * b;
    return std::hypot(fp, fP);
}

} // namespace

double distance_to_sigma(DefSign sig, double p, double P) {
    // Coarse log-spaced scan followed by golden-section refinement of every
    // local minimum. Near the cusp the two branches of sigma_- stay
    // third-order close, so the squared distance is bimodal there and the
    // global grid minimum can sit on the wrong branch.
    const int n = 400;
    const double lt0 = std::log(1e-3), lt1 = std::log(1e3);
    std::array<double, n + 1> d2{};
    for (int i = 0; i <= n; ++i)
        d2[i] = curve_dist2(sig, std::exp(lt0 + (lt1 - lt0) * i / n), p, P);

    double best = *std::min_element(d2.begin(), d2.end());
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 0; i <= n; ++i) {
        const bool left_ok = i == 0 || d2[i] <= d2[i - 1];
        const bool right_ok = i == n || d2[i] <= d2[i + 1];
        if (!left_ok || !right_ok) continue;
        double a = std::exp(lt0 + (lt1 - lt0) * std::max(0, i - 1) / n);
        double b = std::exp(lt0 + (lt1 - lt0) * std::min(n, i + 1) / n);
        double c = b - gr * (b - a), d = a + gr * (b - a);
        for (int it = 0; it < 120 && (b - a) > 1e-14 * (1.0 + b); ++it) {
            if (curve_dist2(sig, c, p, P) < curve_dist2(sig, d, p, P)) {
                b = d;
            } else {
                a = c;
            }
            c = b - gr * (b - a);
            d = a + gr * (b - a);
        }
        best = std::min(best, curve_dist2(sig, 0.5 * (a + b), p, P));
    }
    double dist = std::sqrt(best);

    // The scan cannot resolve the zero of the distance function when the
    // point sits on the curve between grid nodes; there the first-order
    // estimate from the implicit form is accurate. The two branches live in
    // disjoint half-planes, so eligibility by p avoids cross-attribution,
    // and a healthy gradient excludes the cusp where the cubic is singular.
    const bool eligible = sig == DefSign::plus ? p > 5.0 : p < -1.0;
    if (eligible) {
        const double g = sigma_implicit_grad(p, P);
        if (g > 1e-6 * (1.0 + p * p + P * P))
            dist = std::min(dist, std::abs(sigma_implicit(p, P)) / g);
    }
    return dist;
}

bool at_cusp_point(double p, double P, const Tolerances& tol) {
    const double band = tol.invariant_tol * (1.0 + std::hypot(p, P));
    return std::hypot(p + 2.0, P - 1.0) <= band;
}

RegionTag region_classify(double p, double P, const Tolerances& tol) {
    const double band = tol.invariant_tol * (1.0 + std::hypot(p, P));
    if (at_cusp_point(p, P, tol)) return {RegionWhich::C_minus, RegionPosition::cusp};
    if (distance_to_sigma(DefSign::plus, p, P) <= band)
        return {RegionWhich::C_plus, RegionPosition::on_sigma_plus};
    if (distance_to_sigma(DefSign::minus, p, P) <= band)
        return {RegionWhich::C_minus, RegionPosition::on_sigma_minus};
    const BranchRange bp = branch_range(DefSign::plus, p);
    if (bp.defined && P > bp.lo && P < bp.hi) return {RegionWhich::C_plus, RegionPosition::interior};
    const BranchRange bm = branch_range(DefSign::minus, p);
    if (bm.defined && P > bm.lo && P < bm.hi)
        return {RegionWhich::C_minus, RegionPosition::interior};
    return {RegionWhich::C_zero, RegionPosition::interior};
}

bool on_region_boundary(SigClass sig, double p, double P, const Tolerances& tol) {
    const double band = tol.invariant_tol * (1.0 + std::hypot(p, P));
    switch (sig) {
        case SigClass::plus:
            return distance_to_sigma(DefSign::plus, p, P) <= band;
        case SigClass::minus:
            return distance_to_sigma(DefSign::minus, p, P) <= band;
        case SigClass::zero:
            return distance_to_sigma(DefSign::plus, p, P) <= band ||
                   distance_to_sigma(DefSign::minus, p, P) <= band;
    }
    return false;
}

} // namespace affsurf
