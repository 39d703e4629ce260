#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "affsurf/region.hpp"
#include "affsurf/sampling.hpp"
#include "affsurf/tensor.hpp"

using namespace affsurf;

namespace {

bool rel_close(double a, double b, double eps) {
    return std::abs(a - b) <= eps * std::max({1.0, std::abs(a), std::abs(b)});
}

InvariantPoint theta_of(const ChristoffelA& g) { return {psi3(g), Psi3(g)}; }

} // namespace

TEST_CASE("boundary curves hit the pinned points") {
    const InvariantPoint a = sigma_plus(1.0);
    CHECK(a.p == doctest::Approx(7.0));
    CHECK(a.P == doctest::Approx(10.0));

    const InvariantPoint cusp = sigma_minus(1.0 / std::sqrt(2.0));
    CHECK(cusp.p == doctest::Approx(-2.0));
    CHECK(cusp.P == doctest::Approx(1.0));

    // first coordinate of sigma_+ has minimum 6, attained at t^2 = 1/2
    double pmin = 1e300;
    for (double t = 0.05; t < 20.0; t *= 1.01) pmin = std::min(pmin, sigma_plus(t).p);
    CHECK(pmin >= 6.0 - 1e-9);
    CHECK(sigma_plus(1.0 / std::sqrt(2.0)).p == doctest::Approx(6.0));
    CHECK(sigma_plus(1.0 / std::sqrt(2.0)).P == doctest::Approx(5.0));

    CHECK_THROWS_AS(sigma_plus(0.0), parameter_domain_error);
    CHECK_THROWS_AS(sigma_minus(-1.0), parameter_domain_error);
}

TEST_CASE("jacobian determinant zeros and finite-difference check") {
    for (double y : {0.0, 0.7, 2.5}) CHECK(jacobian_det(DefSign::plus, 1.0, y) == 0.0);
    for (double x : {0.3, 0.9, 1.8}) CHECK(jacobian_det(DefSign::minus, x, 0.0) == 0.0);

    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        const double x = rng.uniform(0.3, 1.8), y = rng.uniform(0.1, 2.0);
        const double h = 1e-6;
        for (DefSign sig : {DefSign::plus, DefSign::minus}) {
            auto theta = [&](double xx, double yy) {
                const ChristoffelA g = sig == DefSign::plus ? ChristoffelA::def_plus(xx, yy)
                                                            : ChristoffelA::def_minus(xx, yy);
                return theta_of(g);
            };
            const InvariantPoint px = theta(x + h, y), mx = theta(x - h, y);
            const InvariantPoint py = theta(x, y + h), my = theta(x, y - h);
            const double j11 = (px.p - mx.p) / (2.0 * h), j12 = (py.p - my.p) / (2.0 * h);
            const double j21 = (px.P - mx.P) / (2.0 * h), j22 = (py.P - my.P) / (2.0 * h);
            const double fd = j11 * j22 - j12 * j21;
            CHECK(std::abs(jacobian_det(sig, x, y) - fd) <=
                  1e-4 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("jacobi locus touches the axis at the stated points") {
    CHECK(*jacobi_locus_y(DefSign::plus, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(*jacobi_locus_y(DefSign::minus, 1.0 / std::sqrt(2.0)) ==
          doctest::Approx(0.0).epsilon(1e-6));
    CHECK(!jacobi_locus_y(DefSign::plus, 1.2).has_value());
    CHECK(!jacobi_locus_y(DefSign::minus, 1.0).has_value());

    for (double x = 0.1; x < 1.0; x += 0.07) {
        const auto yp = jacobi_locus_y(DefSign::plus, x);
        REQUIRE(yp.has_value());
        CHECK(std::abs(jacobian_det(DefSign::plus, x, *yp)) <= 1e-9 * (1.0 + 1.0 / (x * x)));
        const auto ym = jacobi_locus_y(DefSign::minus, x);
        REQUIRE(ym.has_value());
        CHECK(std::abs(jacobian_det(DefSign::minus, x, *ym)) <= 1e-8 * (1.0 + 1.0 / (x * x)));
    }
}

TEST_CASE("discriminant locus") {
    CHECK(discriminant_y(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(discriminant_y(0.6) == doctest::Approx(1.6));
    for (double t = 0.05; t < 1.0; t += 0.05) {
        const double y = discriminant_y(t);
        CHECK(std::abs(y * y + 4.0 * (t * t - 1.0)) <= 1e-12);
    }
    CHECK_THROWS_AS(discriminant_y(1.5), parameter_domain_error);
    CHECK_THROWS_AS(discriminant_y(0.0), parameter_domain_error);
}

TEST_CASE("residual rotation parameters: absent cases and the printed tables") {
    const UPair none = u_pm(DefSign::plus, 1.0, 0.0);
    CHECK(!none.u_plus.has_value());
    CHECK(!none.u_minus.has_value());

    const UPair inside = u_pm(DefSign::plus, 0.5, 0.3);  // under the discriminant curve
    CHECK(!inside.u_plus.has_value());
    CHECK(!inside.u_minus.has_value());

    // the worked triple for the positive family
    const UPair u = u_pm(DefSign::plus, 0.1, 2.2);
    REQUIRE(u.u_plus.has_value());
    REQUIRE(u.u_minus.has_value());
    const auto pp = partner_from_u(DefSign::plus, 0.1, 2.2, *u.u_plus);
    const auto pm = partner_from_u(DefSign::plus, 0.1, 2.2, *u.u_minus);
    CHECK(std::abs(pp.first - 0.636041) <= 1e-4);
    CHECK(std::abs(pp.second - (-10.0394)) <= 1e-3);
    CHECK(std::abs(pm.first - 1.56535) <= 1e-4);
    CHECK(std::abs(pm.second - (-9.72988)) <= 1e-3);

    // the worked triple for the negative family
    const UPair v = u_pm(DefSign::minus, 1.0 / std::sqrt(2.0), 100.0);
    REQUIRE(v.u_plus.has_value());
    REQUIRE(v.u_minus.has_value());
    const auto qp = partner_from_u(DefSign::minus, 1.0 / std::sqrt(2.0), 100.0, *v.u_plus);
    const auto qm = partner_from_u(DefSign::minus, 1.0 / std::sqrt(2.0), 100.0, *v.u_minus);
    CHECK(std::abs(qp.first - (-0.00999825)) <= 1e-3);
    CHECK(std::abs(qp.second - 0.706983) <= 1e-3);
    CHECK(std::abs(qm.first - 1.4139) <= 1e-3);
    CHECK(std::abs(qm.second - (-99.9775)) <= 1e-1);

    // singular point of the negative family: partners coincide up to sign
    const UPair w = u_pm(DefSign::minus, 1.0 / std::sqrt(2.0), 0.0);
    const auto wp = partner_from_u(DefSign::minus, 1.0 / std::sqrt(2.0), 0.0, *w.u_plus);
    const auto wm = partner_from_u(DefSign::minus, 1.0 / std::sqrt(2.0), 0.0, *w.u_minus);
    CHECK(std::abs(std::abs(wp.first) - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(wp.second) <= 1e-12);
    CHECK(std::abs(std::abs(wm.first) - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(wm.second) <= 1e-12);
}

TEST_CASE("partners carry the same invariants") {
    Rng rng(22);
    for (int i = 0; i < 60; ++i) {
        const double x = rng.uniform(0.2, 2.0), y = rng.uniform(0.0, 2.5);
        for (DefSign sig : {DefSign::plus, DefSign::minus}) {
            const ChristoffelA g = sig == DefSign::plus ? ChristoffelA::def_plus(x, y)
                                                        : ChristoffelA::def_minus(x, y);
            const UPair u = u_pm(sig, x, y);
            for (const auto& uu : {u.u_plus, u.u_minus}) {
                if (!uu) continue;
                const auto p = partner_from_u(sig, x, y, *uu);
                const ChristoffelA h = sig == DefSign::plus
                                           ? ChristoffelA::def_plus(std::abs(p.first),
                                                                    std::abs(p.second))
                                           : ChristoffelA::def_minus(std::abs(p.first),
                                                                     std::abs(p.second));
                CHECK(rel_close(psi3(h), psi3(g), 1e-7));
                CHECK(rel_close(Psi3(h), Psi3(g), 1e-7));
            }
        }
    }
}

TEST_CASE("region classification at the pinned points") {
    const RegionTag origin = region_classify(0.0, 0.0);
    CHECK(origin.which == RegionWhich::C_zero);
    CHECK(origin.position == RegionPosition::interior);

    const RegionTag glue = region_classify(7.0, 10.0);
    CHECK(glue.position == RegionPosition::on_sigma_plus);

    const RegionTag cusp = region_classify(-2.0, 1.0);
    CHECK(cusp.position == RegionPosition::cusp);

    const RegionTag inner_plus = region_classify(8.0, 9.5);
    CHECK(inner_plus.which == RegionWhich::C_plus);
    CHECK(inner_plus.position == RegionPosition::interior);

    const RegionTag inner_minus = region_classify(-4.0, 3.5);
    CHECK(inner_minus.which == RegionWhich::C_minus);
    CHECK(inner_minus.position == RegionPosition::interior);
}

TEST_CASE("image containment for sampled structures") {
    Rng rng(23);
    Tolerances tol;
    tol.invariant_tol = 1e-7;
    for (int i = 0; i < 400; ++i) {
        for (SigClass sig : {SigClass::plus, SigClass::minus, SigClass::zero}) {
            const ChristoffelA g = sample_type_a_rank2(sig, rng);
            const RegionTag tag = region_classify(psi3(g), Psi3(g), tol);
            if (sig == SigClass::plus)
                CHECK((tag.which == RegionWhich::C_plus ||
                       tag.position == RegionPosition::on_sigma_plus));
            else if (sig == SigClass::minus)
                CHECK((tag.which == RegionWhich::C_minus ||
                       tag.position == RegionPosition::on_sigma_minus ||
                       tag.position == RegionPosition::cusp));
            else
                CHECK((tag.which == RegionWhich::C_zero ||
                       tag.position != RegionPosition::interior));
        }
    }
}

TEST_CASE("boundary gluing identities") {
    Rng rng(24);
    for (int i = 0; i < 100; ++i) {
        // right boundary: the symmetric slice of the first indefinite family
        double u = rng.uniform(0.05, 1.0 / std::sqrt(2.0) - 1e-3);
        double v = std::pow(2.0, -1.5) * (2.0 * u + 1.0 / u);
        InvariantPoint glue = theta_of(ChristoffelA::indef1(v, v));
        InvariantPoint curve = sigma_plus(u);
        CHECK(std::abs(glue.p - curve.p) <= 1e-10 * std::max(1.0, std::abs(curve.p)));
        CHECK(std::abs(glue.P - curve.P) <= 1e-10 * std::max(1.0, std::abs(curve.P)));

        // left boundary: the antisymmetric slice of the second indefinite family
        u = rng.uniform(0.05, 2.0);
        v = std::pow(2.0, -1.5) * (2.0 * u - 1.0 / u);
        glue = theta_of(ChristoffelA::indef2(v, -v));
        curve = sigma_minus(u);
        CHECK(std::abs(glue.p - curve.p) <= 1e-10 * std::max(1.0, std::abs(curve.p)));
        CHECK(std::abs(glue.P - curve.P) <= 1e-10 * std::max(1.0, std::abs(curve.P)));
    }
}

TEST_CASE("curve regularity: sigma_+ regular, sigma_- singular only at the cusp") {
    const double h = 1e-6;
    for (double t = 0.2; t < 3.0; t += 0.01) {
        const InvariantPoint a = sigma_plus(t + h), b = sigma_plus(t - h);
        const double speed = std::hypot(a.p - b.p, a.P - b.P) / (2.0 * h);
        CHECK(speed > 0.1);
    }
    double min_speed = 1e300, argmin = 0.0;
    for (double t = 0.2; t < 3.0; t += 1e-4) {
        const InvariantPoint a = sigma_minus(t + h), b = sigma_minus(t - h);
        const double speed = std::hypot(a.p - b.p, a.P - b.P) / (2.0 * h);
        if (speed < min_speed) {
            min_speed = speed;
            argmin = t;
        }
    }
    CHECK(min_speed < 1e-2);
    CHECK(std::abs(argmin - 1.0 / std::sqrt(2.0)) < 1e-3);
}
