#include "affsurf/sampling.hpp"

#include <cmath>

namespace affsurf {

LinearMap2 sample_gl2(Rng& rng, double det_min, double det_max, bool positive_det) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        LinearMap2 t{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                     rng.uniform(-2.0, 2.0)};
        const double d = t.det();
        if (std::abs(d) < det_min || std::abs(d) > det_max) continue;
        if (positive_det && d < 0.0) continue;
        return t;
    }
    return LinearMap2::identity();
}

ChristoffelA sample_type_a_rank2(SigClass sig, Rng& rng, bool apply_pullback) {
    ChristoffelA g;
    if (sig == SigClass::zero) {
        for (int attempt = 0;; ++attempt) {
            const double x = rng.uniform(-1.5, 1.5);
            const double y = rng.uniform(-1.5, 1.5);
            const double p = x * y - 1.0;
            if (std::abs(p) < 1e-3 && attempt < 10000) continue;
            g = p > 0.0 ? ChristoffelA::indef1(x, y) : ChristoffelA::indef2(x, y);
            break;
        }
    } else {
        const double x = rng.uniform(0.2, 2.2);
        const double y = rng.uniform(0.0, 3.0);
        g = sig == SigClass::plus ? ChristoffelA::def_plus(x, y) : ChristoffelA::def_minus(x, y);
    }
    if (!apply_pullback) return g;
    return pullback_a(g, sample_gl2(rng));
}

ChristoffelA sample_type_a_rank1(Rng& rng) {
    // (a, 0, 0, 0, c, e) has Ricci diag(0, ac) and alpha = 4 e^2 / (a c)
    double a = 0.0, c = 0.0;
    while (std::abs(a) < 0.2) a = rng.uniform(-1.5, 1.5);
    while (std::abs(c) < 0.2) c = rng.uniform(-1.5, 1.5);
    const double e = rng.uniform(-2.0, 2.0);
    const ChristoffelA g{a, 0.0, 0.0, 0.0, c, e};
    return pullback_a(g, sample_gl2(rng));
}

ChristoffelA sample_type_a_box(Rng& rng) {
    ChristoffelA g;
    g.g111 = rng.uniform(-2.0, 2.0);
    g.g112 = rng.uniform(-2.0, 2.0);
    g.g121 = rng.uniform(-2.0, 2.0);
    g.g122 = rng.uniform(-2.0, 2.0);
    g.g221 = rng.uniform(-2.0, 2.0);
    g.g222 = rng.uniform(-2.0, 2.0);
    return g;
}

TypeBSymbol sample_z23b(Rng& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        TypeBSymbol c;
        c.c111 = rng.uniform(-2.0, 2.0);
        c.c112 = rng.uniform(-2.0, 2.0);
        c.c121 = rng.uniform(-2.0, 2.0);
        c.c122 = rng.uniform(-2.0, 2.0);
        c.c221 = rng.uniform(-2.0, 2.0);
        c.c222 = rng.uniform(-2.0, 2.0);
        if (membership_b(c) == MembershipB::z23b) return c;
    }
    return TypeBSymbol{0.0, 0.0, 0.0, 0.0, 1.0, 0.0};
}

GaugeTransform sample_gauge(Rng& rng, bool allow_flip) {
    GaugeTransform g;
    g.b = rng.uniform(-2.0, 2.0);
    g.c = rng.uniform(0.2, 5.0);
    g.flip = allow_flip && rng.uniform() < 0.5;
    return g;
}

} // namespace affsurf
