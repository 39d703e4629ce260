#include "affsurf/type_b.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

namespace affsurf {

GaugeTransform compose(const GaugeTransform& t, const GaugeTransform& s) {
    const double tc = t.effective_c(), sc = s.effective_c();
    return GaugeTransform::from_effective(t.b + tc * s.b, tc * sc);
}

GaugeTransform inverse(const GaugeTransform& t) {
    const double ce = t.effective_c();
    return GaugeTransform::from_effective(-t.b / ce, 1.0 / ce);
}

TypeBSymbol pullback_b(const TypeBSymbol& cc, const GaugeTransform& t, const Tolerances& tol) {
    const double b = t.b, c = t.effective_c();
    if (!std::isfinite(b) || !std::isfinite(c) || std::abs(c) <= tol.zero_tol)
        throw gauge_error("pullback_b: gauge requires c != 0");
    TypeBSymbol n;
    n.c111 = cc.c111 + 2.0 * b * cc.c121 + b * b * cc.c221;
    n.c112 = (cc.c112 + b * (2.0 * cc.c122 - cc.c111) + b * b * (cc.c222 - 2.0 * cc.c121) -
              b * b * b * cc.c221) /
             c;
    n.c121 = c * cc.c121 + b * c * cc.c221;
    n.c122 = cc.c122 + b * cc.c222 - b * (cc.c121 + b * cc.c221);
    n.c221 = c * c * cc.c221;
    n.c222 = c * cc.c222 - b * c * cc.c221;
    return n;
}

TypeBSymbol flip_b(const TypeBSymbol& c) {
    return {c.c111, -c.c112, -c.c121, c.c122, c.c221, -c.c222};
}

InvariantTensorsB invariant_tensors_b(const TypeBSymbol& c) {
    InvariantTensorsB out;
    for (int i = 0; i < 2; ++i) {
        out.rho0[i] = 0.0;
        for (int j = 0; j < 2; ++j) out.rho0[i] += c(i, j, j);
    }
    out.rho1 = {c.c122, c.c222, -c.c121, -c.c221};
    auto rho2_entry = [&](int i, int j) {
        double v = 0.0;
        for (int k = 0; k < 2; ++k) v += c(i, j, k) * out.rho0[k];
        return v;
    };
    out.rho2 = {rho2_entry(0, 0), rho2_entry(0, 1), rho2_entry(1, 0), rho2_entry(1, 1)};
    out.rho3 = rho3(c.as_christoffel());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int d = 0; d < 2; ++d) {
                double v = 0.0;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int k = 0; k < 2; ++k) v += c(i, j, k) * c(a, k, j) * c(b, d, i);
                out.rho4[a][b][d] = v;
            }
    return out;
}

RicciData ricci_b(const TypeBSymbol& c, const Tolerances& tol) {
    const InvariantTensorsB t = invariant_tensors_b(c);
    Mat2 rho;
    rho.m11 = t.rho1.m11 + t.rho2.m11 - t.rho3.m11;
    rho.m12 = t.rho1.m12 + t.rho2.m12 - t.rho3.m12;
    rho.m21 = t.rho1.m21 + t.rho2.m21 - t.rho3.m21;
    rho.m22 = t.rho1.m22 + t.rho2.m22 - t.rho3.m22;
    return classify_ricci_matrix(rho, tol);
}

MembershipB membership_b(const TypeBSymbol& c, const Tolerances& tol) {
    const double s = c.max_abs();
    const RicciData rd = ricci_b(c, tol);
    if (rd.max_abs() <= tol.rank_tol * std::max(1.0, s * s)) return MembershipB::flat;
    const double zl = tol.zero_tol * std::max(1.0, s);
    if (std::abs(c.c121) <= zl && std::abs(c.c221) <= zl && std::abs(c.c222) <= zl)
        return MembershipB::kappa_four;
    return MembershipB::z23b;
}

TypeBSymbol k_pm(int sign, double b, double c) {
    if (!(c > 0.0) || sign * sign != 1)
        throw parameter_domain_error("k_pm: requires sign = +/-1 and c > 0");
    const double s = static_cast<double>(sign);
    TypeBSymbol out;
    out.c111 = 1.0 + s * b * b;
    out.c112 = -b / c * (1.0 + s * b * b);
    out.c121 = s * b * c;
    out.c122 = -s * b * b;
    out.c221 = s * c * c;
    out.c222 = -s * b * c;
    return out;
}

std::optional<std::tuple<int, double, double>> flat_orbit_parameters(const TypeBSymbol& c,
                                                                     const Tolerances& tol) {
    const double zl = tol.zero_tol * std::max(1.0, c.max_abs());
    if (std::abs(c.c221) <= zl) return std::nullopt;
    const int sign = c.c221 > 0.0 ? 1 : -1;
    const double cg = std::sqrt(std::abs(c.c221));
    const double b = c.c121 / (sign * cg);
    const TypeBSymbol k = k_pm(sign, b, cg);
    const double scale = 1.0 + std::max(c.max_abs(), k.max_abs());
    const auto cv = c.to_array(), kv = k.to_array();
    for (int i = 0; i < 6; ++i)
        if (std::abs(cv[i] - kv[i]) > tol.invariant_tol * scale) return std::nullopt;
    return std::make_tuple(sign, b, cg);
}

ChartAssignment chart_assign(const TypeBSymbol& c, const Tolerances& tol) {
    if (membership_b(c, tol) != MembershipB::z23b)
        throw membership_error("chart_assign: not a z23b member");
    const double scale = std::max(1.0, c.max_abs());
    const double zl = tol.zero_tol * scale;

    const double rho0_1 = c.c111 + c.c122;  // rho0(d_1)
    const double rho0_2 = c.c121 + c.c222;  // rho0(d_2)

    ChartAssignment out;
    if (std::abs(rho0_2) > zl) {
        out.chart = rho0_2 > 0.0 ? ChartName::o0_plus : ChartName::o0_minus;
        out.gauge = GaugeTransform{-rho0_1 / rho0_2, 1.0 / std::abs(rho0_2), false};
        out.normalized = pullback_b(c, out.gauge, tol);
        out.z = {out.normalized.c111, out.normalized.c112, out.normalized.c121,
                 out.normalized.c221};
        return out;
    }
    if (std::abs(c.c221) > zl) {
        // rho1(d_2, d_2) = -C_22^1
        out.chart = c.c221 < 0.0 ? ChartName::o1_plus : ChartName::o1_minus;
        out.gauge = GaugeTransform{(c.c222 - c.c121) / (2.0 * c.c221),
                                   1.0 / std::sqrt(std::abs(c.c221)), false};
        out.normalized = pullback_b(c, out.gauge, tol);
        out.z = {out.normalized.c111, out.normalized.c112, out.normalized.c121,
                 out.normalized.c122};
        return out;
    }
    // exceptional neighborhood: fix rho3(d_1, d_2) = 0 and C_12^1 = +/-1
    const Mat2 r3 = rho3(c.as_christoffel());
    if (!(r3.m22 > tol.zero_tol * scale * scale))
        throw canonicalization_error("chart_assign: outside the exceptional chart domain");
    const double b = -r3.m12 / r3.m22;
    const double w = c.c121 + b * c.c221;
    if (std::abs(w) <= zl)
        throw canonicalization_error("chart_assign: C_12^1 vanishes after gauge");
    out.chart = w > 0.0 ? ChartName::o3_plus : ChartName::o3_minus;
    out.gauge = GaugeTransform{b, 1.0 / std::abs(w), false};
    out.normalized = pullback_b(c, out.gauge, tol);
    out.z = {out.normalized.c112, out.normalized.c122, out.normalized.c221, out.normalized.c222};
    return out;
}

namespace {

std::optional<GaugeTransform> verify_gauge(const TypeBSymbol& c1, const TypeBSymbol& c2, double b,
                                           double c_eff, const Tolerances& tol) {
    if (!std::isfinite(b) || !std::isfinite(c_eff) || std::abs(c_eff) <= tol.zero_tol)
        return std::nullopt;
    const GaugeTransform g = GaugeTransform::from_effective(b, c_eff);
    const TypeBSymbol mapped = pullback_b(c1, g, tol);
    const double scale = 1.0 + std::max(c2.max_abs(), mapped.max_abs());
    const auto mv = mapped.to_array(), cv = c2.to_array();
    for (int i = 0; i < 6; ++i)
        if (std::abs(mv[i] - cv[i]) > tol.invariant_tol * scale) return std::nullopt;
    return g;
}

// Component elimination in the order C_22^1, C_12^1, C_22^2. Each branch
// determines (b, c) up to the sign of c; sign incompatibilities yield no
// candidates and certify inequivalence.
std::optional<GaugeTransform> solve_gauge(const TypeBSymbol& c1, const TypeBSymbol& c2,
                                          bool allow_positive, bool allow_negative,
                                          const Tolerances& tol) {
    const double zl = tol.zero_tol * std::max({1.0, c1.max_abs(), c2.max_abs()});
    std::vector<std::pair<double, double>> cands;  // (b, c_eff)

    if (std::abs(c1.c221) > zl) {
        const double ratio = c2.c221 / c1.c221;
        if (ratio > 0.0) {
            const double ca = std::sqrt(ratio);
            for (double ce : {ca, -ca})
                cands.emplace_back((c2.c121 / ce - c1.c121) / c1.c221, ce);
        }
    } else if (std::abs(c1.c121) > zl) {
        const double ce = c2.c121 / c1.c121;
        cands.emplace_back((c2.c111 - c1.c111) / (2.0 * c1.c121), ce);
    } else if (std::abs(c1.c222) > zl) {
        const double ce = c2.c222 / c1.c222;
        cands.emplace_back((c2.c122 - c1.c122) / c1.c222, ce);
    }

    for (bool positive : {true, false}) {
        if (positive && !allow_positive) continue;
        if (!positive && !allow_negative) continue;
        for (const auto& [b, ce] : cands) {
            if ((ce > 0.0) != positive) continue;
            if (auto g = verify_gauge(c1, c2, b, ce, tol)) return g;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<GaugeTransform> equivalent_b(const TypeBSymbol& c1, const TypeBSymbol& c2,
                                           bool oriented, const Tolerances& tol) {
    if (membership_b(c1, tol) != MembershipB::z23b || membership_b(c2, tol) != MembershipB::z23b)
        throw membership_error("equivalent_b: both inputs must be z23b members");
    return solve_gauge(c1, c2, true, !oriented, tol);
}

bool amphichiral_b(const TypeBSymbol& c, const Tolerances& tol) {
    if (membership_b(c, tol) != MembershipB::z23b)
        throw membership_error("amphichiral_b: not a z23b member");
    return solve_gauge(c, c, false, true, tol).has_value();
}

std::pair<int, int> isotropy_b(const TypeBSymbol& c, const Tolerances& tol) {
    return {1, amphichiral_b(c, tol) ? 2 : 1};
}

} // namespace affsurf
