#include "affsurf/type_a.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace affsurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool symbols_close(const ChristoffelA& a, const ChristoffelA& b, double eps) {
    const auto av = a.to_array(), bv = b.to_array();
    const double scale = 1.0 + std::max(a.max_abs(), b.max_abs());
    for (int i = 0; i < 6; ++i)
        if (std::abs(av[i] - bv[i]) > eps * scale) return false;
    return true;
}

double rho_quadratic(const Mat2& rho, double x1, double x2) {
    return rho.m11 * x1 * x1 + 2.0 * rho.m12 * x1 * x2 + rho.m22 * x2 * x2;
}

double nabla_rho_cubed(const NablaRho& nr, double x1, double x2) {
    const double x[2] = {x1, x2};
    double v = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) v += nr[i][j][k] * x[i] * x[j] * x[k];
    return v;
}

// Inverse symmetric square root of a positive-definite matrix.
LinearMap2 inv_sym_sqrt(const Mat2& a) {
    const auto ev = sym_eigenvalues(a);
    const auto v1 = sym_eigenvector(a, ev[0]);
    const double v2x = -v1[1], v2y = v1[0];
    const double s1 = 1.0 / std::sqrt(ev[0]), s2 = 1.0 / std::sqrt(ev[1]);
    return {s1 * v1[0] * v1[0] + s2 * v2x * v2x, s1 * v1[0] * v1[1] + s2 * v2x * v2y,
            s1 * v1[0] * v1[1] + s2 * v2x * v2y, s1 * v1[1] * v1[1] + s2 * v2y * v2y};
}

// Roots of (T_theta^* g)_12^1 over [0, pi). The expression is a homogeneous
// cubic in (cos theta, sin theta), so there are at most three roots; a
// uniform bracket scan catches sign changes and a local polish catches the
// tangential double roots on the discriminant locus.
std::vector<double> rotation_roots(const ChristoffelA& g) {
    auto h = [&](double th) { return pullback_a(g, LinearMap2::rotation(th)).g121; };
    const double scale = 1.0 + g.max_abs();
    const int n = 64;
    std::vector<double> roots;
    std::array<double, n + 1> vals{};
    for (int i = 0; i <= n; ++i) vals[i] = h(kPi * i / n);

    for (int i = 0; i < n; ++i) {
        const double t0 = kPi * i / n, t1 = kPi * (i + 1) / n;
        if (std::abs(vals[i]) <= 1e-13 * scale) {
            roots.push_back(t0);
            continue;
        }
        if (vals[i] * vals[i + 1] < 0.0) {
            double a = t0, b = t1, fa = vals[i];
            for (int it = 0; it < 200 && (b - a) > 1e-15; ++it) {
                const double m = 0.5 * (a + b), fm = h(m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if (fa * fm < 0.0)
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
    }
    // tangential roots: minimize h^2 around interior grid minima
    for (int i = 1; i < n; ++i) {
        if (std::abs(vals[i]) >= std::abs(vals[i - 1]) ||
            std::abs(vals[i]) > std::abs(vals[i + 1]))
            continue;
        if (std::abs(vals[i]) > 1e-3 * scale) continue;
        if (vals[i - 1] * vals[i] < 0.0 || vals[i] * vals[i + 1] < 0.0) continue;
        double a = kPi * (i - 1) / n, b = kPi * (i + 1) / n;
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double c = b - gr * (b - a), d = a + gr * (b - a);
        for (int it = 0; it < 120 && (b - a) > 1e-14; ++it) {
            if (std::abs(h(c)) < std::abs(h(d)))
                b = d;
            else
                a = c;
            c = b - gr * (b - a);
            d = a + gr * (b - a);
        }
        const double m = 0.5 * (a + b);
        if (std::abs(h(m)) <= 1e-9 * scale) roots.push_back(m);
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> dedup;
    for (double r : roots) {
        if (r >= kPi - 1e-7) r -= kPi;
        bool dup = false;
        for (double q : dedup)
            if (std::abs(q - r) < 1e-6) dup = true;
        if (!dup) dedup.push_back(r);
    }
    return dedup;
}

struct DefCandidate {
    double x = 0.0, y = 0.0;
    LinearMap2 map;  // takes the rho-normalized symbol to `symbol`
    ChristoffelA symbol;
};

// All normal-form candidates reachable from a symbol whose Ricci tensor is
// already +/-Id. One candidate per residual rotation with axis signs fixed
// so x > 0, y >= 0. `eps` absorbs the conditioning of the normalization:
// near the rank boundary the symbol entries are large and the structural
// zeros are only reproduced up to the achieved normalization quality.
std::vector<DefCandidate> definite_candidates(const ChristoffelA& g1, int sign, double eps,
                                              const Tolerances& tol) {
    const double scale = 1.0 + g1.max_abs();
    std::vector<DefCandidate> out;
    for (double th : rotation_roots(g1)) {
        LinearMap2 map = LinearMap2::rotation(th);
        ChristoffelA s = pullback_a(g1, map, tol);
        if (s.g122 < 0.0) {
            map = map * LinearMap2::diagonal(-1.0, 1.0);
            s = pullback_a(g1, map, tol);
        }
        if (s.g222 < 0.0) {
            map = map * LinearMap2::diagonal(1.0, -1.0);
            s = pullback_a(g1, map, tol);
        }
        const double x = s.g122, y = s.g222;
        if (!(x > 1e-8)) continue;
        const ChristoffelA ideal = sign > 0 ? ChristoffelA::def_plus(x, y)
                                            : ChristoffelA::def_minus(x, y);
        if (!symbols_close(s, ideal, eps)) continue;
        bool dup = false;
        for (const auto& c : out)
            if (std::abs(c.x - x) < 1e-9 * scale && std::abs(c.y - y) < 1e-9 * scale) dup = true;
        if (dup) continue;
        out.push_back({x, y, map, s});
    }
    return out;
}

SigClass sig_class_of(const RicciData& rd) {
    switch (rd.signature) {
        case SignatureTag::positive: return SigClass::plus;
        case SignatureTag::negative: return SigClass::minus;
        default: return SigClass::zero;
    }
}

} // namespace

Rank1Invariants rank1_invariants(const ChristoffelA& g, const Tolerances& tol) {
    const RicciData rd = ricci_type_a(g, tol);
    if (rd.rank != 1) throw rank_error("rank1_invariants: Ricci rank is not 1");
    const Mat2 rho = rd.matrix();
    const auto ev = sym_eigenvalues(rho);
    const double lead = std::abs(ev[0]) >= std::abs(ev[1]) ? ev[0] : ev[1];
    const auto x = sym_eigenvector(rho, lead);

    const double rxx = rho_quadratic(rho, x[0], x[1]);
    const double nxxx = nabla_rho_cubed(nabla_rho(g), x[0], x[1]);
    Rank1Invariants out;
    out.alpha = nxxx * nxxx / (rxx * rxx * rxx);
    out.epsilon = rxx > 0.0 ? 1 : -1;
    out.is_symmetric = std::abs(out.alpha) <= tol.zero_tol;
    if (out.is_symmetric)
        out.also_type_b = out.epsilon < 0;
    else
        out.also_type_b = out.alpha < 0.0 || out.alpha >= 16.0;
    return out;
}

double rank1_alpha_from_direction(const ChristoffelA& g, double x1, double x2,
                                  const Tolerances& tol) {
    const RicciData rd = ricci_type_a(g, tol);
    if (rd.rank != 1) throw rank_error("rank1_alpha_from_direction: Ricci rank is not 1");
    const double rxx = rho_quadratic(rd.matrix(), x1, x2);
    const double scale = rd.max_abs() * (x1 * x1 + x2 * x2);
    if (std::abs(rxx) <= tol.zero_tol * std::max(1.0, scale))
        throw parameter_domain_error("rank1_alpha_from_direction: direction is rho-null");
    const double nxxx = nabla_rho_cubed(nabla_rho(g), x1, x2);
    return nxxx * nxxx / (rxx * rxx * rxx);
}

namespace {
CanonicalFormA canonicalize_definite_impl(const ChristoffelA& g, const Tolerances& tol);
CanonicalFormA canonicalize_indefinite_impl(const ChristoffelA& g, const Tolerances& tol);
} // namespace

CanonicalFormA canonicalize_definite(const ChristoffelA& g, const Tolerances& tol) {
    try {
        return canonicalize_definite_impl(g, tol);
    } catch (const invalid_map_error&) {
        // a singular or non-finite internal map means the reduction lost the
        // input to roundoff, not that the caller passed a bad map
        throw canonicalization_error("canonicalize_definite: normalization degenerated");
    }
}

CanonicalFormA canonicalize_indefinite(const ChristoffelA& g, const Tolerances& tol) {
    try {
        return canonicalize_indefinite_impl(g, tol);
    } catch (const invalid_map_error&) {
        throw canonicalization_error("canonicalize_indefinite: normalization degenerated");
    }
}

namespace {

CanonicalFormA canonicalize_definite_impl(const ChristoffelA& g, const Tolerances& tol) {
    const RicciData rd = ricci_type_a(g, tol);
    if (rd.signature != SignatureTag::positive && rd.signature != SignatureTag::negative)
        throw signature_error("canonicalize_definite: Ricci tensor is not definite");
    const int sign = rd.signature == SignatureTag::positive ? 1 : -1;

    Mat2 a = rd.matrix();
    if (sign < 0) a = {-a.m11, -a.m12, -a.m21, -a.m22};
    const LinearMap2 normalize = inv_sym_sqrt(a);
    const ChristoffelA g1 = pullback_a(g, normalize, tol);

    // achieved normalization quality; degrades near the rank boundary
    const Mat2 res = ricci_type_a(g1, tol).matrix();
    const double sd = static_cast<double>(sign);
    const double quality = Mat2{res.m11 - sd, res.m12, res.m21, res.m22 - sd}.max_abs();
    const double eps = std::clamp(100.0 * quality, 1e-7, 1e-3);

    const auto candidates = definite_candidates(g1, sign, eps, tol);
    if (candidates.empty())
        throw canonicalization_error("canonicalize_definite: residual rotation not found");

    std::size_t pick = 0;
    if (sign > 0) {
        const auto rep = fundamental_rep_plus(candidates[0].x, candidates[0].y, tol);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const double d = std::hypot(candidates[i].x - rep.first, candidates[i].y - rep.second);
            if (d < best) {
                best = d;
                pick = i;
            }
        }
        if (best > std::max(1e-6, 1e3 * quality) * (1.0 + std::hypot(rep.first, rep.second)))
            throw canonicalization_error(
                "canonicalize_definite: no candidate reaches the fundamental domain");
    } else {
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            const auto& c = candidates[i];
            const auto& b = candidates[pick];
            if (c.x < b.x - 1e-9 || (std::abs(c.x - b.x) <= 1e-9 && c.y < b.y)) pick = i;
        }
    }

    const auto& c = candidates[pick];
    CanonicalFormA out;
    out.variant = sign > 0 ? CanonicalVariant::def_plus : CanonicalVariant::def_minus;
    out.x = c.x;
    out.y = c.y;
    out.witness = normalize * c.map;
    out.form = sign > 0 ? ChristoffelA::def_plus(c.x, c.y) : ChristoffelA::def_minus(c.x, c.y);
    if (!symbols_close(pullback_a(g, out.witness, tol), out.form, 1e-6))
        throw canonicalization_error("canonicalize_definite: witness verification failed");
    return out;
}

CanonicalFormA canonicalize_indefinite_impl(const ChristoffelA& g, const Tolerances& tol) {
    const RicciData rd = ricci_type_a(g, tol);
    if (rd.signature != SignatureTag::indefinite)
        throw signature_error("canonicalize_indefinite: Ricci tensor is not indefinite");
    const Mat2 rho = rd.matrix();
    const auto ev = sym_eigenvalues(rho);  // ev[0] > 0 > ev[1]
    const auto v1 = sym_eigenvector(rho, ev[0]);
    const auto v2 = sym_eigenvector(rho, ev[1]);
    const double s1 = 1.0 / std::sqrt(ev[0]), s2 = 1.0 / std::sqrt(-ev[1]);
    // null frame with rho(e1, e2) = 1
    LinearMap2 m;
    m.a11 = s1 * v1[0] + s2 * v2[0];
    m.a21 = s1 * v1[1] + s2 * v2[1];
    m.a12 = 0.5 * (s1 * v1[0] - s2 * v2[0]);
    m.a22 = 0.5 * (s1 * v1[1] - s2 * v2[1]);

    LinearMap2 witness = m;
    ChristoffelA s = pullback_a(g, witness, tol);
    const double scale = 1.0 + s.max_abs();
    const Mat2 res = ricci_type_a(s, tol).matrix();
    const double quality =
        Mat2{res.m11, res.m12 - 1.0, res.m21 - 1.0, res.m22}.max_abs();
    const double forced_eps = std::max(1e-6, 1e3 * quality);
    if (std::abs(s.g111 - s.g122) > forced_eps * scale ||
        std::abs(s.g121 - s.g222) > forced_eps * scale)
        throw canonicalization_error("canonicalize_indefinite: forced relations violated");

    auto apply = [&](const LinearMap2& t) {
        witness = witness * t;
        s = pullback_a(g, witness, tol);
    };

    double x = 0.5 * (s.g111 + s.g122), y = 0.5 * (s.g121 + s.g222);
    const double branch = x * y - 1.0;
    const double band = tol.zero_tol * (1.0 + x * x + y * y);

    CanonicalFormA out;
    if (branch > band) {
        // make g_11^2 = g_22^1 = sqrt(xy - 1) > 0
        const double a = std::pow(s.g221 / s.g112, 1.0 / 6.0);
        apply(LinearMap2::diagonal(a, 1.0 / a));
        if (s.g112 < 0.0) apply(LinearMap2::diagonal(-1.0, -1.0));
        x = 0.5 * (s.g111 + s.g122);
        y = 0.5 * (s.g121 + s.g222);
        if (x < y) {  // swap the roles of x and y
            apply(LinearMap2{0.0, 1.0, 1.0, 0.0});
            x = 0.5 * (s.g111 + s.g122);
            y = 0.5 * (s.g121 + s.g222);
        }
        out.variant = CanonicalVariant::indef1;
        out.form = ChristoffelA::indef1(x, y);
    } else if (branch < -band) {
        const double a = std::pow(-s.g221 / s.g112, 1.0 / 6.0);
        apply(LinearMap2::diagonal(a, 1.0 / a));
        if (s.g112 < 0.0) apply(LinearMap2::diagonal(-1.0, -1.0));
        x = 0.5 * (s.g111 + s.g122);
        y = 0.5 * (s.g121 + s.g222);
        if (x + y < 0.0) {  // (x, y) -> (-y, -x) keeps the sign convention
            apply(LinearMap2{0.0, -1.0, -1.0, 0.0});
            x = 0.5 * (s.g111 + s.g122);
            y = 0.5 * (s.g121 + s.g222);
        }
        out.variant = CanonicalVariant::indef2;
        out.form = ChristoffelA::indef2(x, y);
    } else {
        // exceptional branch: g_11^2 g_22^1 = 0
        const double zl = tol.zero_tol * scale;
        const bool p_zero = std::abs(s.g112) <= zl;
        const bool q_zero = std::abs(s.g221) <= zl;
        if (p_zero && q_zero) {
            if (std::abs(x) <= zl)
                throw canonicalization_error("canonicalize_indefinite: degenerate xy = 1 stratum");
            const double a = 1.0 / x;
            apply(LinearMap2::diagonal(a, 1.0 / a));
            x = 0.5 * (s.g111 + s.g122);
            y = 0.5 * (s.g121 + s.g222);
            out.form = ChristoffelA{x, 0.0, y, x, 0.0, y};
        } else {
            if (q_zero) apply(LinearMap2{0.0, 1.0, 1.0, 0.0});  // move the nonzero entry to g_22^1
            const double a = std::cbrt(s.g221);
            apply(LinearMap2::diagonal(a, 1.0 / a));
            x = 0.5 * (s.g111 + s.g122);
            y = 0.5 * (s.g121 + s.g222);
            out.form = ChristoffelA{x, 0.0, y, x, 1.0, y};
        }
        out.variant = CanonicalVariant::indef_exceptional;
    }
    out.x = x;
    out.y = y;
    out.witness = witness;
    if (!symbols_close(pullback_a(g, out.witness, tol), out.form, 1e-6))
        throw canonicalization_error("canonicalize_indefinite: witness verification failed");
    return out;
}

} // namespace

std::pair<double, double> fundamental_rep_plus(double x, double y, const Tolerances& tol) {
    if (!(x > 0.0) || y < -tol.zero_tol || !std::isfinite(x) || !std::isfinite(y))
        throw parameter_domain_error("fundamental_rep_plus: (x, y) outside the parameter strip");
    y = std::max(y, 0.0);

    auto violation = [&](double cx, double cy) {
        double v = std::max(cx - 1.0, 0.0);
        const auto top = jacobi_locus_y(DefSign::plus, std::min(cx, 1.0));
        if (top)
            v = std::max(v, cy - *top);
        else
            v = std::numeric_limits<double>::infinity();
        return v;
    };

    std::vector<std::pair<double, double>> cands{{x, y}};
    const UPair u = u_pm(DefSign::plus, x, y, tol);
    for (const auto& uu : {u.u_plus, u.u_minus})
        if (uu) {
            const auto p = partner_from_u(DefSign::plus, x, y, *uu);
            cands.emplace_back(std::abs(p.first), std::abs(p.second));
        }
    std::size_t best = 0;
    double best_v = violation(cands[0].first, cands[0].second);
    for (std::size_t i = 1; i < cands.size(); ++i) {
        const double v = violation(cands[i].first, cands[i].second);
        if (v < best_v) {
            best_v = v;
            best = i;
        }
    }
    return cands[best];
}

int n_count(DefSign sig, double x, double y, const Tolerances& tol) {
    if (!(x > 0.0) || y < 0.0)
        throw parameter_domain_error("n_count: (x, y) outside the parameter strip");
    const double band = tol.zero_tol * (1.0 + x * x + y * y);
    if (sig == DefSign::minus) {
        const double corner = 1.0 / std::sqrt(2.0);
        if (std::abs(x - corner) <= band && y <= band) return 1;
        if (y <= band) return 2;
        const auto top = jacobi_locus_y(DefSign::minus, x);
        if (top && std::abs(y - *top) <= band * (1.0 + *top)) return 2;
        return 3;
    }
    if (std::abs(x - 1.0) <= band && y <= band) return 1;
    const double disc = y * y + 4.0 * (x * x - 1.0);
    if (disc < -band) return 1;
    if (std::abs(disc) <= band) return 2;           // discriminant locus
    if (std::abs(x - 1.0) <= band) return 2;        // the ray x = 1
    if (y <= band) return 2;                        // axis, x > 1
    const auto top = jacobi_locus_y(DefSign::plus, x);
    if (top && std::abs(y - *top) <= band * (1.0 + *top)) return 2;
    return 3;
}

bool equivalent_a(const ChristoffelA& g1, const ChristoffelA& g2, bool oriented,
                  const Tolerances& tol) {
    const RicciData r1 = ricci_type_a(g1, tol), r2 = ricci_type_a(g2, tol);
    if (r1.rank == 0 || r2.rank == 0)
        throw flat_input_error("equivalent_a: flat structures are out of scope");
    if (r1.rank != r2.rank) return false;

    auto close = [&](double a, double b) {
        return std::abs(a - b) <= tol.invariant_tol * std::max({1.0, std::abs(a), std::abs(b)});
    };
    if (r1.rank == 1) {
        const Rank1Invariants i1 = rank1_invariants(g1, tol), i2 = rank1_invariants(g2, tol);
        return i1.epsilon == i2.epsilon && close(i1.alpha, i2.alpha);
    }
    if (r1.signature != r2.signature) return false;
    if (!close(psi3(g1, tol), psi3(g2, tol))) return false;
    if (!close(Psi3(g1, tol), Psi3(g2, tol))) return false;
    if (oriented && !close(chi(g1, tol), chi(g2, tol))) return false;
    return true;
}

std::optional<LinearMap2> linear_witness_a(const ChristoffelA& g1, const ChristoffelA& g2,
                                           const Tolerances& tol) {
    const RicciData r1 = ricci_type_a(g1, tol), r2 = ricci_type_a(g2, tol);
    if (r1.rank != 2 || r2.rank != 2 || r1.signature != r2.signature) return std::nullopt;
    const bool definite = r1.signature != SignatureTag::indefinite;

    CanonicalFormA c1, c2;
    try {
        c1 = definite ? canonicalize_definite(g1, tol) : canonicalize_indefinite(g1, tol);
        c2 = definite ? canonicalize_definite(g2, tol) : canonicalize_indefinite(g2, tol);
    } catch (const canonicalization_error&) {
        return std::nullopt;
    }

    std::vector<LinearMap2> between{LinearMap2::identity()};
    if (definite) {
        // orbit motions of the normal form: residual rotations and axis flips
        for (double th : rotation_roots(c1.form)) {
            for (double sx : {1.0, -1.0})
                for (double sy : {1.0, -1.0})
                    between.push_back(LinearMap2::rotation(th) * LinearMap2::diagonal(sx, sy));
        }
    } else {
        between.push_back(LinearMap2{0.0, 1.0, 1.0, 0.0});
        between.push_back(LinearMap2{0.0, -1.0, -1.0, 0.0});
        between.push_back(LinearMap2::diagonal(-1.0, -1.0));
    }
    const LinearMap2 w2inv = c2.witness.inverse();
    for (const auto& v : between) {
        if (!symbols_close(pullback_a(c1.form, v, tol), c2.form, 1e-7)) continue;
        const LinearMap2 w = c1.witness * v * w2inv;
        if (symbols_close(pullback_a(g1, w, tol), g2, 1e-8)) return w;
    }
    return std::nullopt;
}

std::pair<int, int> isotropy_orders_a(const ChristoffelA& g, const Tolerances& tol) {
    const RicciData rd = ricci_type_a(g, tol);
    if (rd.rank != 2) throw rank_error("isotropy_orders_a: Ricci rank is not 2");
    const double p = psi3(g, tol), P = Psi3(g, tol);
    const SigClass sig = rd.signature == SignatureTag::positive  ? SigClass::plus
                         : rd.signature == SignatureTag::negative ? SigClass::minus
                                                                   : SigClass::zero;
    if (sig == SigClass::minus && at_cusp_point(p, P, tol)) return {3, 6};
    if (on_region_boundary(sig, p, P, tol)) return {1, 2};
    return {1, 1};
}

ClassificationA classify_a(const ChristoffelA& g, const Tolerances& tol) {
    ClassificationA out;
    const RicciData rd = ricci_type_a(g, tol);
    if (rd.rank == 0) {
        out.rank = RankClass::flat;
        return out;
    }
    if (rd.rank == 1) {
        out.rank = RankClass::rank1;
        out.rank1 = rank1_invariants(g, tol);
        return out;
    }
    out.rank = RankClass::rank2;
    Rank2Invariants inv;
    inv.sig = sig_class_of(rd);
    inv.psi3 = psi3(g, tol);
    inv.Psi3 = Psi3(g, tol);
    inv.chi = chi(g, tol);
    if (inv.sig == SigClass::minus && at_cusp_point(inv.psi3, inv.Psi3, tol))
        inv.region = RegionPos::cusp;
    else if (std::abs(inv.chi) <= tol.zero_tol * (1.0 + std::abs(inv.psi3) + std::abs(inv.Psi3)))
        inv.region = RegionPos::boundary;
    else
        inv.region = RegionPos::interior;
    const auto iso = isotropy_orders_a(g, tol);
    inv.iso_plus = iso.first;
    inv.iso_full = iso.second;
    out.rank2 = inv;
    // keep the classification total: inputs within roundoff of the rank
    // boundary can defeat the reduction even though the tags say rank 2
    try {
        out.canonical = inv.sig == SigClass::zero ? canonicalize_indefinite(g, tol)
                                                  : canonicalize_definite(g, tol);
    } catch (const canonicalization_error&) {
        out.canonical.reset();
    }
    return out;
}

} // namespace affsurf
