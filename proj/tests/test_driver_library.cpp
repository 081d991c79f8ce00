#include <doctest.h>

#include <cmath>

#include "loewner/driver_library.hpp"
#include "loewner/numerics.hpp"

using namespace loewner;

TEST_CASE("point-minimizer parameters") {
    for (double theta : {0.3, kPi / 3, kPi / 2, 2.5}) {
        const WangParams p(theta);
        CHECK(p.tau > 0.0);
        CHECK(p.tau <= 0.25 + 1e-15);
    }
    // hcap([0,i]) = 1/2, so the vertical segment has Loewner time 1/4
    CHECK(WangParams(kPi / 2).tau == doctest::Approx(0.25));
    CHECK(WangParams(kPi / 3).terminal_xi == doctest::Approx(-2.0 / 3.0));
    CHECK_THROWS_AS(WangParams(0.0), std::invalid_argument);
    CHECK_THROWS_AS((WangParams(kPi)), std::invalid_argument);
}

TEST_CASE("welding-minimizer parameters") {
    const EmwParams p(-1.0, 2.0);
    CHECK(p.r == doctest::Approx(0.5));
    CHECK(p.tau == doctest::Approx(13.0 / 24.0));
    CHECK(p.terminal_lambda == doctest::Approx(-2.0 / 3.0));
    // radicand guard (3y-x)(y-3x) > 0 holds for admissible pairs
    for (auto [x, y] : {std::pair{-1.0, 2.0}, {-5.0, 0.1}, {-0.01, 7.0}})
        CHECK((3 * y - x) * (y - 3 * x) > 0.0);
    CHECK_THROWS_AS(EmwParams(1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(EmwParams(-1.0, -2.0), std::invalid_argument);
}

TEST_CASE("upward point-minimizer driver") {
    // vertical case short-circuits to the zero driver on [0, 1/4]
    const Driver v = wang_xi(kPi / 2);
    CHECK(v.horizon == doctest::Approx(0.25));
    CHECK(v.value(0.1) == 0.0);

    const Driver xi = wang_xi(kPi / 3);
    CHECK(xi.value(0.0) == doctest::Approx(0.0));
    CHECK(xi.value(xi.horizon) == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));

    // monotone decreasing for theta < pi/2
    double prev = 1.0;
    for (int k = 0; k <= 200; ++k) {
        const double val = xi.value(xi.horizon * k / 200);
        CHECK(val <= prev + 1e-15);
        prev = val;
    }

    // reflection for theta > pi/2
    const Driver neg = wang_xi(2.0 * kPi / 3);
    for (double t : {0.0, 0.1, 0.2})
        CHECK(neg.value(t) == doctest::Approx(-xi.value(t)));

    CHECK_THROWS_AS(wang_xi(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(wang_xi(3.5), std::invalid_argument);
}

TEST_CASE("small-time expansion of the upward driver") {
    // xi(t) = -(32/3) b t^{3/2} + O(t^{7/2}) with b = cos/sin^3
    const double theta = kPi / 3;
    const Driver xi = wang_xi(theta);
    const double b = std::cos(theta) / std::pow(std::sin(theta), 3);
    std::vector<double> lt, lr;
    for (double t : {1e-3, 1e-4, 1e-5, 1e-6}) {
        const double resid = std::abs(xi.value(t) / std::pow(t, 1.5) + 32.0 / 3.0 * b);
        lt.push_back(std::log(t));
        lr.push_back(std::log(resid));
    }
    CHECK(fit_slope(lt, lr) >= 2.0 - 0.05);
}

TEST_CASE("downward point-minimizer driver") {
    const Driver mid = wang_lambda_down(kPi / 4);
    CHECK(mid.value(0.0) == doctest::Approx(0.0));
    CHECK(mid.value(mid.horizon) ==
          doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-14));
    CHECK(wang_lambda_down(kPi / 2).value(0.2) == 0.0);
}

TEST_CASE("centered tip image of the point minimizer") {
    const double theta = kPi / 3;
    CHECK(std::abs(wang_tip_image(theta, 0.0) - std::polar(1.0, theta)) < 1e-15);
    CHECK(wang_tip_image(kPi / 2, 0.1) ==
          cplx(0.0, std::sqrt(1.0 - 0.4)));

    // d|z|^2/dt = -4 (1 + 2 cos^2(arg z)) along the flow
    const WangParams p(theta);
    for (double frac : {0.2, 0.5, 0.8}) {
        const double t = p.tau * frac;
        const double h = 1e-6;
        const cplx z = wang_tip_image(theta, t);
        const double fd =
            (std::norm(wang_tip_image(theta, t + h)) -
             std::norm(wang_tip_image(theta, t - h))) / (2.0 * h);
        const double ct = std::cos(std::arg(z));
        CHECK(fd == doctest::Approx(-4.0 * (1.0 + 2.0 * ct * ct)).epsilon(1e-5));
    }

    // modulus and height both decrease
    double prev_abs = 1.0, prev_y = std::sin(theta);
    for (int k = 1; k <= 20; ++k) {
        const cplx z = wang_tip_image(theta, p.tau * k / 20);
        CHECK(std::abs(z) <= prev_abs + 1e-14);
        CHECK(z.imag() <= prev_y + 1e-14);
        prev_abs = std::abs(z);
        prev_y = z.imag();
    }
}

TEST_CASE("limit driver of the point-minimizer family") {
    const Driver g0 = gamma0_xi();
    CHECK(g0.horizon == doctest::Approx(1.0 / 12.0));
    CHECK(g0.value(0.0) == 0.0);
    CHECK(g0.value(1.0 / 12.0) == doctest::Approx(-4.0 / 3.0).epsilon(1e-14));
    // pointwise limit of the family driver as theta -> 0+
    CHECK(std::abs(wang_xi(1e-4).value(0.05) - g0.value(0.05)) < 1e-6);
}

TEST_CASE("welding-minimizer driver") {
    // symmetric pair degenerates to the zero driver on [0, 1/4]
    const Driver sym = emw_lambda(-1.0, 1.0);
    CHECK(sym.horizon == doctest::Approx(0.25));
    CHECK(sym.value(0.2) == 0.0);

    const Driver lam = emw_lambda(-1.0, 2.0);
    CHECK(lam.value(0.0) == doctest::Approx(0.0));
    CHECK(lam.value(lam.horizon) == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));

    // reflection across the imaginary axis negates the driver
    const Driver refl = emw_lambda(-2.0, 1.0);
    for (double frac : {0.1, 0.5, 0.9})
        CHECK(refl.value(refl.horizon * frac) ==
              doctest::Approx(-lam.value(lam.horizon * frac)).epsilon(1e-13));

    // monotone with sign opposite to x0 + y0
    double prev = 1.0;
    for (int k = 0; k <= 100; ++k) {
        const double val = lam.value(lam.horizon * k / 100);
        CHECK(val <= prev + 1e-15);
        CHECK(val <= 0.0);
        prev = val;
    }

    CHECK_THROWS_AS(emw_lambda(0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(emw_lambda(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("welding-minimizer family is closed under scaling") {
    const Driver base = emw_lambda(-1.0, 2.0);
    const Driver scaled = scale_driver(base, 1.7);
    const Driver direct = emw_lambda(-1.7, 3.4);
    CHECK(scaled.horizon == doctest::Approx(direct.horizon));
    for (int k = 0; k <= 64; ++k) {
        const double t = direct.horizon * k / 64;
        CHECK(std::abs(scaled.value(t) - direct.value(t)) < 1e-12);
    }
}

TEST_CASE("universal welding curve driver") {
    const Driver g = universal_gamma_lambda();
    CHECK(g.horizon == doctest::Approx(kPi / 6));

    // finite negative terminal value -(4/3) sqrt(pi)
    CHECK(g.value(g.horizon) ==
          doctest::Approx(-4.0 * std::sqrt(kPi) / 3.0).epsilon(1e-13));

    // small-t slope: lam ~ -(16/sqrt3) (3 (pi/6)^{2/3})^{-3/2} t^{3/2}
    const double coef =
        -16.0 / std::sqrt(3.0) * std::pow(3.0 * std::pow(kPi / 6, 2.0 / 3.0), -1.5);
    for (double t : {1e-4, 1e-5})
        CHECK(g.value(t) / std::pow(t, 1.5) == doctest::Approx(coef).epsilon(1e-3));

    // continuity against the family driver at the degenerate normalization
    const double y0 = 2.0 * std::sqrt(kPi);
    const Driver limit = emw_lambda(-1e-8 * y0, y0);
    for (double t : {0.1, 0.3, 0.5})
        CHECK(g.value(t) == doctest::Approx(limit.value(t)).epsilon(1e-6));
}

TEST_CASE("universal-curve truncation law") {
    CHECK(universal_truncation_time(1.0 - 1e-9) < 1e-8);
    CHECK(universal_truncation_time(1e-9) ==
          doctest::Approx(kPi / 6).epsilon(1e-7));
    CHECK(universal_truncation_time(0.5) ==
          doctest::Approx((kPi / 6) * 0.5 * 3.25 / std::pow(1.5, 3)));

    // strictly decreasing in r
    double prev = kPi / 6;
    for (int k = 1; k <= 40; ++k) {
        const double t = universal_truncation_time(k / 41.0);
        CHECK(t < prev);
        prev = t;
    }

    // terminal driver value at the truncation matches the driver itself
    for (double r : {0.25, 0.5, 0.75})
        CHECK(universal_gamma_lambda().value(universal_truncation_time(r)) ==
              doctest::Approx(universal_truncation_driver_value(r)).epsilon(1e-12));

    CHECK_THROWS_AS(universal_truncation_time(1.5), std::invalid_argument);
}

TEST_CASE("orthogonal circular arc") {
    const Driver arc = circular_arc_driver();
    CHECK(arc.value(0.125) == doctest::Approx(1.5));
    CHECK(arc_time_for_angle(kPi / 2) == doctest::Approx(0.0));
    CHECK(arc_time_for_ratio(0.5) == doctest::Approx(0.0));
    CHECK(arc_time_for_angle(kPi / 4) == doctest::Approx((1.0 - 0.25) / 8.0));

    // welding endpoints and the welding map are mutually consistent
    for (double t : {0.02, 0.06, 0.1}) {
        const auto [x, y] = arc_weld_endpoints(t);
        CHECK(x < 0.0);
        CHECK(y > 0.0);
        CHECK(arc_weld(t, x) == doctest::Approx(y).epsilon(1e-13));
        CHECK(arc_weld(t, 0.0) == doctest::Approx(0.0));
    }

    // base prime-end images of the scaled arc straddle its driver
    const Driver a22 = arc22_driver();
    for (double t : {0.1, 0.5, 0.9}) {
        const auto [gm, gp] = arc22_base_images(t);
        CHECK(gm < a22.value(t));
        CHECK(gp > a22.value(t));
    }
}

TEST_CASE("sqrt driver and slit angles") {
    CHECK(sqrt_alpha(0.0) == doctest::Approx(0.5));
    CHECK(sqrt_c(1.0 / 3.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sqrt_alpha(sqrt_c(0.27)) == doctest::Approx(0.27).epsilon(1e-14));

    // welded endpoints for alpha = 1/3 at t = 1: ratio -x/y = (1-a)/a = 2
    const auto [x, y] = sqrt_weld_endpoints(1.0 / 3.0, 1.0);
    CHECK(x == doctest::Approx(-2.0 * std::sqrt(2.0)));
    CHECK(y == doctest::Approx(std::sqrt(2.0)));
    CHECK(-x / y == doctest::Approx(2.0));
}
