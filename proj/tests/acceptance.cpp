// Acceptance suite: checks every contract of the classification toolkit at
// its stated tolerance and prints one PASS/FAIL line per criterion. The
// process exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "affsurf/region.hpp"
#include "affsurf/report.hpp"
#include "affsurf/sampling.hpp"
#include "affsurf/svg.hpp"
#include "affsurf/tensor.hpp"
#include "affsurf/type_a.hpp"
#include "affsurf/type_b.hpp"

using namespace affsurf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool rel_close(double a, double b, double eps) {
    return std::abs(a - b) <= eps * std::max({1.0, std::abs(a), std::abs(b)});
}

bool mat_close(const Mat2& a, const Mat2& b, double eps) {
    return std::abs(a.m11 - b.m11) <= eps && std::abs(a.m12 - b.m12) <= eps &&
           std::abs(a.m21 - b.m21) <= eps && std::abs(a.m22 - b.m22) <= eps;
}

bool symbols_close(const ChristoffelA& a, const ChristoffelA& b, double eps) {
    const double s = 1.0 + std::max(a.max_abs(), b.max_abs());
    const auto av = a.to_array(), bv = b.to_array();
    for (int i = 0; i < 6; ++i)
        if (std::abs(av[i] - bv[i]) > eps * s) return false;
    return true;
}

bool symbols_close_b(const TypeBSymbol& a, const TypeBSymbol& b, double eps) {
    return symbols_close(a.as_christoffel(), b.as_christoffel(), eps);
}

// --- criterion 1: closed-form Ricci against the curvature oracle ---------

Outcome criterion_ricci_oracle() {
    Outcome out;
    Rng rng(101);
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 10000; ++i) {
        const ChristoffelA g = sample_type_a_box(rng);
        const Mat2 a = ricci_type_a(g).matrix();
        const Mat2 b = ricci_oracle(g, Family::A).matrix();
        const double scale = std::max(1.0, std::max(a.max_abs(), b.max_abs()));
        if (!mat_close(a, b, 1e-12 * scale)) out.fail("oracle mismatch");
    }
    const double dt = elapsed_s(t0);
    if (dt >= 1.0) out.fail("runtime " + std::to_string(dt) + " s exceeds 1 s");
    if (out.pass) out.detail = "10000 samples in " + std::to_string(dt) + " s";
    return out;
}

// --- criterion 2: normal forms have unit Ricci tensor --------------------

Outcome criterion_normal_forms() {
    Outcome out;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double x = 0.2 + 0.2 * i;
            const double y = j / 3.0;
            const Mat2 rp = ricci_type_a(ChristoffelA::def_plus(x, y)).matrix();
            const Mat2 rm = ricci_type_a(ChristoffelA::def_minus(x, y)).matrix();
            if (!mat_close(rp, Mat2{1.0, 0.0, 0.0, 1.0}, 1e-14)) out.fail("plus family");
            if (!mat_close(rm, Mat2{-1.0, 0.0, 0.0, -1.0}, 1e-14)) out.fail("minus family");
        }
    }
    if (out.pass) out.detail = "100 grid points, tolerance 1e-14";
    return out;
}

// --- criterion 3: invariance of psi3/Psi3, covariance of chi -------------

Outcome criterion_invariance() {
    Outcome out;
    Rng rng(103);
    int done = 0;
    while (done < 1000) {
        const ChristoffelA g = sample_type_a_box(rng);
        if (ricci_type_a(g).rank != 2) continue;
        ++done;
        const LinearMap2 t = sample_gl2(rng, 0.1, 10.0);
        const ChristoffelA h = pullback_a(g, t);
        if (!rel_close(psi3(h), psi3(g), 1e-8)) out.fail("psi3 drift");
        if (!rel_close(Psi3(h), Psi3(g), 1e-8)) out.fail("Psi3 drift");
        const double want = t.det() > 0.0 ? chi(g) : -chi(g);
        if (!rel_close(chi(h), want, 1e-8)) out.fail("chi covariance");
    }
    if (out.pass) out.detail = "1000 pullbacks, |det| in [0.1, 10]";
    return out;
}

// --- criterion 4: the two printed partner tables --------------------------

Outcome criterion_partner_tables() {
    Outcome out;
    const UPair u = u_pm(DefSign::plus, 0.1, 2.2);
    if (!u.u_plus || !u.u_minus) {
        out.fail("missing solutions for (0.1, 2.2)");
        return out;
    }
    const auto pp = partner_from_u(DefSign::plus, 0.1, 2.2, *u.u_plus);
    const auto pm = partner_from_u(DefSign::plus, 0.1, 2.2, *u.u_minus);
    if (std::abs(pp.first - 0.636041) > 1e-4 || std::abs(pp.second + 10.0394) > 1e-4)
        out.fail("first row of the positive table");
    if (std::abs(pm.first - 1.56535) > 1e-4 || std::abs(pm.second + 9.72988) > 1e-4)
        out.fail("second row of the positive table");

    const double x = 1.0 / std::sqrt(2.0);
    const UPair v = u_pm(DefSign::minus, x, 100.0);
    const auto qp = partner_from_u(DefSign::minus, x, 100.0, *v.u_plus);
    const auto qm = partner_from_u(DefSign::minus, x, 100.0, *v.u_minus);
    if (std::abs(qp.first + 0.00999825) > 1e-3 || std::abs(qp.second - 0.706983) > 1e-3)
        out.fail("first row of the negative table");
    if (std::abs(qm.first - 1.4139) > 1e-3 || std::abs(qm.second + 99.9775) > 1e-3)
        out.fail("second row of the negative table");
    if (out.pass) out.detail = "both tables reproduced";
    return out;
}

// --- criterion 5: pinned invariant points ---------------------------------

Outcome criterion_pinned_points() {
    Outcome out;
    const ChristoffelA glue = ChristoffelA::def_plus(1.0, 0.0);
    if (std::abs(psi3(glue) - 7.0) > 1e-10 || std::abs(Psi3(glue) - 10.0) > 1e-10)
        out.fail("glue point");
    const ChristoffelA csp = ChristoffelA::cusp();
    if (std::abs(psi3(csp) + 2.0) > 1e-10 || std::abs(Psi3(csp) - 1.0) > 1e-10)
        out.fail("cusp point");
    const ChristoffelA exceptional{1.0, 0.0, 1.0, 1.0, 0.0, 1.0};
    if (std::abs(psi3(exceptional) - 6.0) > 1e-10 || std::abs(Psi3(exceptional) - 5.0) > 1e-10)
        out.fail("exceptional point");
    if (out.pass) out.detail = "(7,10), (-2,1), (6,5) at 1e-10";
    return out;
}

// --- criterion 6: image containment ---------------------------------------

Outcome criterion_containment() {
    Outcome out;
    Rng rng(106);
    Tolerances tol;
    tol.invariant_tol = 1e-7;
    const auto t0 = std::chrono::steady_clock::now();
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        for (SigClass sig : {SigClass::plus, SigClass::minus, SigClass::zero}) {
            const ChristoffelA g = sample_type_a_rank2(sig, rng);
            const RegionTag tag = region_classify(psi3(g), Psi3(g), tol);
            bool ok = false;
            switch (sig) {
                case SigClass::plus:
                    ok = tag.which == RegionWhich::C_plus ||
                         tag.position == RegionPosition::on_sigma_plus;
                    break;
                case SigClass::minus:
                    ok = tag.which == RegionWhich::C_minus ||
                         tag.position == RegionPosition::on_sigma_minus ||
                         tag.position == RegionPosition::cusp;
                    break;
                case SigClass::zero:
                    ok = tag.which == RegionWhich::C_zero ||
                         tag.position != RegionPosition::interior;
                    break;
            }
            if (!ok) ++violations;
        }
    }
    const double dt = elapsed_s(t0);
    if (violations > 0) out.fail(std::to_string(violations) + " containment violations");
    if (dt >= 10.0) out.fail("runtime " + std::to_string(dt) + " s exceeds 10 s");
    if (out.pass) out.detail = "30000 samples in " + std::to_string(dt) + " s, band 1e-7";
    return out;
}

// --- criterion 7: isotropy orders ------------------------------------------

Outcome criterion_isotropy() {
    Outcome out;
    const ChristoffelA csp = ChristoffelA::cusp();
    if (!symbols_close(pullback_a(csp, LinearMap2::rotation(2.0 * M_PI / 3.0)), csp, 1e-12))
        out.fail("rotation by 2 pi / 3 does not fix the cusp structure");
    if (isotropy_orders_a(csp) != std::pair<int, int>{3, 6}) out.fail("cusp orders");

    Rng rng(107);
    for (int i = 0; i < 50; ++i) {
        const double x = rng.uniform(0.3, 1.9);
        if (isotropy_orders_a(ChristoffelA::def_plus(x, 0.0)) != std::pair<int, int>{1, 2})
            out.fail("boundary orders (plus family)");
        const double xm = rng.uniform(0.3, 1.9);
        if (std::abs(xm - 1.0 / std::sqrt(2.0)) > 1e-2 &&
            isotropy_orders_a(ChristoffelA::def_minus(xm, 0.0)) != std::pair<int, int>{1, 2})
            out.fail("boundary orders (minus family)");
        // interior: strictly between the axis and the fold locus
        const double xi = rng.uniform(0.3, 0.9);
        const double yi = 0.5 * *jacobi_locus_y(DefSign::plus, xi);
        if (yi > 0.05 &&
            isotropy_orders_a(ChristoffelA::def_plus(xi, yi)) != std::pair<int, int>{1, 1})
            out.fail("interior orders");
    }
    if (out.pass) out.detail = "cusp (3,6), boundary (1,2), interior (1,1)";
    return out;
}

// --- criterion 8: equivalence decision -------------------------------------

Outcome criterion_equivalence() {
    Outcome out;
    Rng rng(108);
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 500; ++i) {
        // family A orbit pair: two independent pullbacks of one normal form
        const SigClass sig =
            i % 3 == 0 ? SigClass::plus : (i % 3 == 1 ? SigClass::minus : SigClass::zero);
        const ChristoffelA base = sample_type_a_rank2(sig, rng, false);
        const ChristoffelA g = pullback_a(base, sample_gl2(rng));
        const ChristoffelA h = pullback_a(base, sample_gl2(rng));
        if (!equivalent_a(g, h, false)) out.fail("constructed pair judged inequivalent");
        const auto w = linear_witness_a(g, h);
        if (!w || !symbols_close(pullback_a(g, *w), h, 1e-8))
            out.fail("missing or invalid linear witness");

        // family B orbit pair with a verifying gauge witness
        const TypeBSymbol c = sample_z23b(rng);
        const TypeBSymbol d = pullback_b(c, sample_gauge(rng, true));
        const auto gw = equivalent_b(c, d, false);
        if (!gw || !symbols_close_b(pullback_b(c, *gw), d, 1e-8))
            out.fail("missing or invalid gauge witness");
    }
    int separated = 0;
    while (separated < 500) {
        const double x1 = rng.uniform(0.1, 0.9), x2 = rng.uniform(0.1, 0.9);
        const double y1 = rng.uniform(0.05, 0.85) * *jacobi_locus_y(DefSign::plus, x1);
        const double y2 = rng.uniform(0.05, 0.85) * *jacobi_locus_y(DefSign::plus, x2);
        if (std::hypot(x1 - x2, y1 - y2) < 1e-2) continue;
        if (equivalent_a(ChristoffelA::def_plus(x1, y1), ChristoffelA::def_plus(x2, y2), false))
            out.fail("separated definite pair judged equivalent");
        ++separated;
    }
    separated = 0;
    while (separated < 500) {
        const TypeBSymbol c1 = sample_z23b(rng), c2 = sample_z23b(rng);
        const ChartAssignment z1 = chart_assign(c1), z2 = chart_assign(c2);
        double dz = z1.chart == z2.chart ? 0.0 : 1.0;
        for (int k = 0; k < 4; ++k) dz += std::abs(z1.z[k] - z2.z[k]);
        const ChartAssignment z2f = chart_assign(flip_b(c2));
        double dzf = z1.chart == z2f.chart ? 0.0 : 1.0;
        for (int k = 0; k < 4; ++k) dzf += std::abs(z1.z[k] - z2f.z[k]);
        if (std::min(dz, dzf) < 1e-2) continue;
        if (equivalent_b(c1, c2, false)) out.fail("separated gauge pair judged equivalent");
        ++separated;
    }
    const double dt = elapsed_s(t0);
    if (dt >= 5.0) out.fail("runtime " + std::to_string(dt) + " s exceeds 5 s");
    if (out.pass) out.detail = "1000 orbit + 1000 separated pairs in " + std::to_string(dt) + " s";
    return out;
}

// --- criterion 9: the scaled-family suite -----------------------------------

Outcome criterion_type_b() {
    Outcome out;
    Rng rng(109);
    for (int i = 0; i < 10000; ++i) {
        const TypeBSymbol c = TypeBSymbol::from_array(sample_type_a_box(rng).to_array());
        const Mat2 a = ricci_b(c).matrix();
        const Mat2 b = ricci_oracle(c.as_christoffel(), Family::B).matrix();
        const double scale = std::max(1.0, std::max(a.max_abs(), b.max_abs()));
        if (!mat_close(a, b, 1e-12 * scale)) out.fail("ricci decomposition mismatch");
    }
    for (int i = 0; i < 1000; ++i) {
        const double b = rng.uniform(-2.0, 2.0), cpar = rng.uniform(0.1, 3.0);
        const int sign = rng.uniform() < 0.5 ? 1 : -1;
        const TypeBSymbol k = k_pm(sign, b, cpar);
        if (ricci_b(k).max_abs() > 1e-12 * std::max(1.0, k.max_abs() * k.max_abs()))
            out.fail("flat orbit not flat");
    }
    // tensoriality of the five invariant tensors
    for (int i = 0; i < 1000; ++i) {
        const TypeBSymbol c = sample_z23b(rng);
        const GaugeTransform g = sample_gauge(rng, true);
        const double ce = g.effective_c();
        const double v[2][2] = {{1.0, g.b}, {0.0, ce}};
        const InvariantTensorsB before = invariant_tensors_b(c);
        const InvariantTensorsB after = invariant_tensors_b(pullback_b(c, g));
        const double scale =
            std::pow(1.0 + std::abs(g.b) + std::abs(ce), 3) * (1.0 + std::pow(c.max_abs(), 3));
        for (int a = 0; a < 2; ++a) {
            double e = 0.0;
            for (int m = 0; m < 2; ++m) e += v[a][m] * before.rho0[m];
            if (std::abs(after.rho0[a] - e) > 1e-9 * scale) out.fail("rho0 transformation");
        }
        const Mat2 mb[3] = {before.rho1, before.rho2, before.rho3};
        const Mat2 ma[3] = {after.rho1, after.rho2, after.rho3};
        for (int which = 0; which < 3; ++which)
            for (int a = 0; a < 2; ++a)
                for (int b2 = 0; b2 < 2; ++b2) {
                    double e = 0.0;
                    for (int m = 0; m < 2; ++m)
                        for (int n = 0; n < 2; ++n) e += v[a][m] * v[b2][n] * mb[which](m, n);
                    if (std::abs(ma[which](a, b2) - e) > 1e-9 * scale)
                        out.fail("rho1/rho2/rho3 transformation");
                }
        for (int a = 0; a < 2; ++a)
            for (int b2 = 0; b2 < 2; ++b2)
                for (int d = 0; d < 2; ++d) {
                    double e = 0.0;
                    for (int m = 0; m < 2; ++m)
                        for (int n = 0; n < 2; ++n)
                            for (int p = 0; p < 2; ++p)
                                e += v[a][m] * v[b2][n] * v[d][p] * before.rho4[m][n][p];
                    if (std::abs(after.rho4[a][b2][d] - e) > 1e-9 * scale)
                        out.fail("rho4 transformation");
                }
    }
    // chart gauge uniqueness across the three chart families
    for (int i = 0; i < 1000; ++i) {
        TypeBSymbol seed;
        const double z1 = rng.uniform(-1.5, 1.5), z2 = rng.uniform(-1.5, 1.5);
        const double z3 = rng.uniform(-1.5, 1.5), z4 = rng.uniform(-1.5, 1.5);
        const double sgn = rng.uniform() < 0.5 ? 1.0 : -1.0;
        if (i % 3 == 0)
            seed = TypeBSymbol{z1, z2, z3, -z1, z4, sgn - z3};
        else if (i % 3 == 1)
            seed = TypeBSymbol{z1, z2, 0.0, z4, -sgn, 0.0};
        else
            seed = TypeBSymbol{0.0, z1, sgn, z2, 0.0, -sgn};
        if (membership_b(seed) != MembershipB::z23b) continue;
        GaugeTransform move = sample_gauge(rng);
        move.c = rng.uniform(0.5, 2.0);
        const TypeBSymbol c = pullback_b(seed, move);
        const ChartAssignment ca = chart_assign(c);
        auto normalized_ok = [&](const GaugeTransform& g) {
            const TypeBSymbol n = pullback_b(c, g);
            const double eps = 1e-7 * (1.0 + n.max_abs());
            switch (ca.chart) {
                case ChartName::o0_plus:
                case ChartName::o0_minus:
                    return std::abs(n.c111 + n.c122) <= eps &&
                           std::abs(std::abs(n.c121 + n.c222) - 1.0) <= eps;
                case ChartName::o1_plus:
                case ChartName::o1_minus:
                    return std::abs(std::abs(n.c221) - 1.0) <= eps &&
                           std::abs(n.c222 - n.c121) <= eps;
                default:
                    return std::abs(std::abs(n.c121) - 1.0) <= eps &&
                           std::abs(rho3(n.as_christoffel()).m12) <= eps;
            }
        };
        if (!normalized_ok(ca.gauge)) out.fail("chart normalization fails");
        for (double d : {1e-3, -1e-3}) {
            if (normalized_ok(GaugeTransform{ca.gauge.b + d, ca.gauge.c, false}))
                out.fail("gauge not unique in b");
            if (normalized_ok(GaugeTransform{ca.gauge.b, ca.gauge.c * (1.0 + d), false}))
                out.fail("gauge not unique in c");
        }
    }
    // amphichirality agrees with the kill-the-odd-components criterion
    auto direct = [&](const TypeBSymbol& c) {
        const double eps = 1e-8 * (1.0 + c.max_abs());
        if (std::abs(c.c221) <= eps)
            return std::abs(c.c121) <= eps && std::abs(c.c222) <= eps &&
                   std::abs(c.c112) <= eps;
        const double b = -c.c121 / c.c221;
        const double s = std::pow(1.0 + std::abs(b), 3);
        if (std::abs(c.c222 - b * c.c221) > eps * s) return false;
        const double num = c.c112 + b * (2.0 * c.c122 - c.c111) +
                           b * b * (c.c222 - 2.0 * c.c121) - b * b * b * c.c221;
        return std::abs(num) <= eps * s;
    };
    for (int i = 0; i < 1000; ++i) {
        TypeBSymbol c;
        if (i % 4 == 0) {
            // the metrizable family and its gauge translates stay amphichiral
            const double k = rng.uniform(0.3, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
            const double s = rng.uniform() < 0.5 ? -1.0 : 1.0;
            c = pullback_b(TypeBSymbol{k, 0.0, 0.0, k, s * k, 0.0}, sample_gauge(rng));
            if (membership_b(c) != MembershipB::z23b) continue;
            if (!amphichiral_b(c)) out.fail("metrizable family not amphichiral");
        } else {
            c = sample_z23b(rng);
        }
        if (amphichiral_b(c) != direct(c)) out.fail("amphichirality criteria disagree");
    }
    if (out.pass) out.detail = "ricci, flat orbits, tensoriality, gauge uniqueness, amphichirality";
    return out;
}

// --- criterion 10: boundary gluing identities --------------------------------

Outcome criterion_gluing() {
    Outcome out;
    Rng rng(110);
    for (int i = 0; i < 100; ++i) {
        const double u = rng.uniform(0.05, 1.0 / std::sqrt(2.0) - 1e-3);
        const double v = std::pow(2.0, -1.5) * (2.0 * u + 1.0 / u);
        const ChristoffelA glue1 = ChristoffelA::indef1(v, v);
        const InvariantPoint s1 = sigma_plus(u);
        if (std::abs(psi3(glue1) - s1.p) > 1e-10 * std::max(1.0, std::abs(s1.p)) ||
            std::abs(Psi3(glue1) - s1.P) > 1e-10 * std::max(1.0, std::abs(s1.P)))
            out.fail("right boundary identity");

        const double u2 = rng.uniform(0.05, 2.0);
        const double v2 = std::pow(2.0, -1.5) * (2.0 * u2 - 1.0 / u2);
        const ChristoffelA glue2 = ChristoffelA::indef2(v2, -v2);
        const InvariantPoint s2 = sigma_minus(u2);
        if (std::abs(psi3(glue2) - s2.p) > 1e-10 * std::max(1.0, std::abs(s2.p)) ||
            std::abs(Psi3(glue2) - s2.P) > 1e-10 * std::max(1.0, std::abs(s2.P)))
            out.fail("left boundary identity");
    }
    if (out.pass) out.detail = "100 parameters per boundary, tolerance 1e-10";
    return out;
}

// --- criterion 11: rank-1 invariants ------------------------------------------

Outcome criterion_rank1() {
    Outcome out;
    Rng rng(111);
    for (int i = 0; i < 20; ++i) {
        const ChristoffelA g = sample_type_a_rank1(rng);
        const Rank1Invariants base = rank1_invariants(g);
        const Mat2 rho = ricci_type_a(g).matrix();
        int used = 0;
        while (used < 100) {
            const double x1 = rng.uniform(-1.0, 1.0), x2 = rng.uniform(-1.0, 1.0);
            const double rxx = rho.m11 * x1 * x1 + 2.0 * rho.m12 * x1 * x2 + rho.m22 * x2 * x2;
            if (std::abs(rxx) < 0.05 * rho.max_abs() * (x1 * x1 + x2 * x2)) continue;
            if (!rel_close(rank1_alpha_from_direction(g, x1, x2), base.alpha, 1e-9))
                out.fail("direction dependence of alpha");
            ++used;
        }
        const Rank1Invariants moved = rank1_invariants(pullback_a(g, sample_gl2(rng)));
        if (moved.epsilon != base.epsilon || !rel_close(moved.alpha, base.alpha, 1e-7))
            out.fail("pullback dependence of (alpha, epsilon)");
    }
    // flags at alpha = 0, 8, 20 on the family (1, 0, 0, 0, 4/alpha, 1)
    const Rank1Invariants a0 = rank1_invariants(ChristoffelA{1.0, 0.0, 0.0, 0.0, 2.0, 0.0});
    const Rank1Invariants a0m = rank1_invariants(ChristoffelA{1.0, 0.0, 0.0, 0.0, -2.0, 0.0});
    const Rank1Invariants a8 = rank1_invariants(ChristoffelA{1.0, 0.0, 0.0, 0.0, 0.5, 1.0});
    const Rank1Invariants a20 = rank1_invariants(ChristoffelA{1.0, 0.0, 0.0, 0.0, 0.2, 1.0});
    if (!(a0.is_symmetric && !a0.also_type_b)) out.fail("alpha 0, positive sign");
    if (!(a0m.is_symmetric && a0m.also_type_b)) out.fail("alpha 0, negative sign");
    if (!(std::abs(a8.alpha - 8.0) < 1e-12 && !a8.also_type_b)) out.fail("alpha 8");
    if (!(std::abs(a20.alpha - 20.0) < 1e-12 && a20.also_type_b)) out.fail("alpha 20");
    if (out.pass) out.detail = "direction/pullback independence and membership flags";
    return out;
}

// --- criterion 12: deterministic pipeline and figure emission ------------------

Outcome criterion_cli() {
    Outcome out;
    std::ostringstream s1, s2;
    run_sample(s1, Family::A, SigClass::minus, 50, 424242, "json");
    run_sample(s2, Family::A, SigClass::minus, 50, 424242, "json");
    if (s1.str() != s2.str()) out.fail("sampling is not deterministic");

    std::ostringstream c1, c2;
    std::istringstream i1(s1.str()), i2(s1.str());
    run_classify(i1, c1, Tolerances{}, "json");
    run_classify(i2, c2, Tolerances{}, "json");
    if (c1.str().empty() || c1.str() != c2.str()) out.fail("classification is not byte-stable");

    PlotParams params;
    const PlotResult plot = render_plot(PlotTarget::regions, params);
    // well-formedness: every opened tag closes in order
    std::vector<std::string> stack;
    bool ok = true;
    for (std::size_t i = 0; (i = plot.svg.find('<', i)) != std::string::npos;) {
        const std::size_t j = plot.svg.find('>', i);
        if (j == std::string::npos) {
            ok = false;
            break;
        }
        std::string tag = plot.svg.substr(i + 1, j - i - 1);
        i = j + 1;
        if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) {
                ok = false;
                break;
            }
            stack.pop_back();
            continue;
        }
        const bool self_closing = tag.back() == '/';
        if (self_closing) tag.pop_back();
        if (!self_closing) stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
    }
    if (!ok || !stack.empty()) out.fail("figure markup is not well formed");
    if (plot.svg.find("<polyline id=\"sigma_plus\"") == std::string::npos ||
        plot.svg.find("<polyline id=\"sigma_minus\"") == std::string::npos)
        out.fail("figure misses a boundary curve");
    const std::string glue =
        svg_coord(plot.frame.map_x(7.0)) + "," + svg_coord(plot.frame.map_y(10.0));
    const std::string cusp =
        svg_coord(plot.frame.map_x(-2.0)) + "," + svg_coord(plot.frame.map_y(1.0));
    if (plot.svg.find(glue) == std::string::npos) out.fail("curve misses the glue point");
    if (plot.svg.find(cusp) == std::string::npos) out.fail("curve misses the cusp point");
    if (out.pass) out.detail = "byte-identical pipeline, boundary curves through the pinned points";
    return out;
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        std::function<Outcome()> fn;
    };
    const std::vector<Entry> criteria = {
        {1, "ricci oracle equivalence", criterion_ricci_oracle},
        {2, "normal forms have unit ricci", criterion_normal_forms},
        {3, "invariance suite", criterion_invariance},
        {4, "printed partner tables", criterion_partner_tables},
        {5, "pinned invariant points", criterion_pinned_points},
        {6, "image containment", criterion_containment},
        {7, "isotropy orders", criterion_isotropy},
        {8, "equivalence decision", criterion_equivalence},
        {9, "scaled-family suite", criterion_type_b},
        {10, "boundary gluing identities", criterion_gluing},
        {11, "rank-1 invariants", criterion_rank1},
        {12, "deterministic pipeline and figures", criterion_cli},
    };
    int failures = 0;
    for (const auto& entry : criteria) {
        Outcome out;
        try {
            out = entry.fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        if (!out.pass) ++failures;
        std::printf("%s criterion %2d (%s): %s\n", out.pass ? "PASS" : "FAIL", entry.id,
                    entry.label, out.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
