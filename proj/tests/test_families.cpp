#include <doctest.h>

#include <cmath>

#include "loewner/driver_library.hpp"
#include "loewner/families.hpp"
#include "loewner/flow.hpp"

using namespace loewner;

TEST_CASE("point-minimizer ODE system") {
    // vertical case: x stays 0, y(t) = sqrt(1 - 4t)
    const auto vert = wang_ode_solve(kPi / 2, 500);
    for (size_t i = 0; i < vert.times.size(); ++i) {
        CHECK(std::abs(vert.x[i]) < 1e-14);
        CHECK(vert.y[i] ==
              doctest::Approx(std::sqrt(1.0 - 4.0 * vert.times[i])).epsilon(1e-9));
    }

    // closed-form match on [0, 0.9 tau]
    const double theta = kPi / 3;
    const auto ode = wang_ode_solve(theta, 4000);
    const Driver lam = wang_lambda_down(theta);
    const double s3 = std::pow(std::sin(theta), 3);
    for (size_t i = 0; i < ode.times.size(); ++i) {
        const double t = ode.times[i];
        CHECK(std::abs(ode.lambda[i] - lam.value(t)) < 1e-6);
        const cplx z = wang_tip_image(theta, t);
        CHECK(std::abs(ode.x[i] - z.real()) < 1e-6);
        CHECK(std::abs(ode.y[i] - z.imag()) < 1e-6);
        // conserved quantity x sin^3(theta) = cos(theta) y^3
        CHECK(std::abs(ode.x[i] * s3 -
                       std::cos(theta) * std::pow(ode.y[i], 3)) < 1e-8);
    }
}

TEST_CASE("welding-minimizer ODE system") {
    // symmetric collapse: driver stays zero, x = -sqrt(1 - 4t)
    const auto sym = emw_ode_solve(-1.0, 1.0, 500);
    for (size_t i = 0; i < sym.times.size(); ++i) {
        CHECK(std::abs(sym.xi[i]) < 1e-14);
        CHECK(sym.x[i] ==
              doctest::Approx(-std::sqrt(1.0 - 4.0 * sym.times[i])).epsilon(1e-9));
    }

    const EmwParams p(-1.0, 2.0);
    const auto ode = emw_ode_solve(-1.0, 2.0, 4000);
    const Driver xi = reverse_driver(emw_lambda(-1.0, 2.0));
    const double xi_tau = (2.0 / 3.0) * (p.x0 + p.y0);
    for (size_t i = 0; i < ode.times.size(); ++i) {
        const double t = ode.times[i];
        CHECK(std::abs(ode.xi[i] - xi.value(t)) < 1e-6);
        // auxiliary driver ODE in terms of (xi - xi_tau) and tau - t
        const double num = 16.0 * (ode.xi[i] - xi_tau);
        const double den = (ode.xi[i] - xi_tau) * (ode.xi[i] - xi_tau) -
                           (32.0 / 3.0) * (p.tau - t);
        const double direct = -4.0 / ode.x[i] - 4.0 / ode.y[i];
        CHECK(std::abs(num / den - direct) < 1e-6);
    }

    // A = (x+y)/2 obeys A' = -(3/4) xi'
    for (size_t i = 1; i + 1 < ode.times.size(); i += 97) {
        const double h = ode.times[i + 1] - ode.times[i - 1];
        const double a_next = 0.5 * (ode.x[i + 1] + ode.y[i + 1]);
        const double a_prev = 0.5 * (ode.x[i - 1] + ode.y[i - 1]);
        const double da = (a_next - a_prev) / h;
        const double dxi = (ode.xi[i + 1] - ode.xi[i - 1]) / h;
        CHECK(da == doctest::Approx(-0.75 * dxi).epsilon(1e-6));
    }

    // capacity decreases at exact rate 24 in (y-x)^2 - 2xy
    for (size_t i = 1; i + 1 < ode.times.size(); i += 53) {
        auto q = [&](size_t k) {
            return (ode.y[k] - ode.x[k]) * (ode.y[k] - ode.x[k]) -
                   2.0 * ode.x[k] * ode.y[k];
        };
        const double dq = (q(i + 1) - q(i - 1)) /
                          (ode.times[i + 1] - ode.times[i - 1]);
        CHECK(std::abs(dq + 24.0) < 1e-6);
    }
}

TEST_CASE("cubic variety of the limit curve") {
    CHECK(variety_residual_gamma0(cplx(0.0, 0.0)) == 0.0);
    CHECK(variety_residual_gamma0(cplx(1.0, 0.0)) == 0.0);

    const Driver lam = reverse_driver(gamma0_xi());
    const auto tr = trace_curve(lam, lam.horizon, 12000, 600);
    for (const auto& z : tr.points)
        CHECK(std::abs(variety_residual_gamma0(z)) < 1e-3);
}

TEST_CASE("rational map of the limit curve") {
    CHECK(rational_map_R(cplx(1.0, 0.0)) == cplx(1.0, 0.0));
    CHECK(std::abs(rational_map_R(cplx(3.0, 0.0))) == 0.0);

    // fixed points 0, 1, inf with local orders 2, 3, 2 via series ratios
    for (double eps : {1e-3, 1e-4}) {
        CHECK(std::abs(rational_map_R(cplx(eps, 0)) / (eps * eps) - (-3.0)) <
              20 * eps);
        CHECK(std::abs((rational_map_R(cplx(1 + eps, 0)) - 1.0)) <
              10.0 * eps * eps * eps);
        CHECK(std::abs(rational_map_R(cplx(1 / eps, 0)) * eps * eps - (-1.0 / 3.0)) <
              10 * eps);
    }

    // real on the real axis
    for (double x : {-2.0, -0.5, 0.2, 0.9, 2.7})
        CHECK(rational_map_R(cplx(x, 0.0)).imag() == 0.0);

    const Driver lam = reverse_driver(gamma0_xi());
    const auto tr = trace_curve(lam, lam.horizon, 12000, 600);
    for (const auto& z : tr.points)
        CHECK(std::abs(rational_map_R(z).imag()) < 1e-3);
}

TEST_CASE("quartic variety of the universal welding curve") {
    CHECK(variety_residual_universal(cplx(0.0, 0.0)) == 0.0);
    // i is not on the curve
    CHECK(variety_residual_universal(cplx(0.0, 1.0)) == doctest::Approx(1.0));

    const Driver lam = universal_gamma_lambda();
    const double T = lam.horizon;
    const auto tr = trace_curve(lam, T, 12000, 800);
    for (size_t i = 0; i < tr.points.size(); ++i) {
        if (T - tr.times[i] < T * 1e-4) continue;  // pinching window
        CHECK(std::abs(variety_residual_universal(tr.points[i])) < 2e-3);
        CHECK(universal_square_circle_residual(tr.points[i]) < 2e-3);
    }

    // the tip route stays on the variety deep into the pinch
    for (double rem : {1e-4, 1e-5}) {
        const cplx tip = tip_point(lam, T - rem, 12000);
        CHECK(std::abs(variety_residual_universal(tip)) < 1e-7);
        CHECK(universal_square_circle_residual(tip) < 1e-7);
    }
}

TEST_CASE("driver universality of the point minimizers") {
    // alpha = theta is the identity case
    CHECK(wang_universality_check(kPi / 3, kPi / 3, 2000, 100) < 1e-10);
    // crossing to a smaller angle extends the driver beyond its own horizon
    CHECK(wang_universality_check(kPi / 3, kPi / 4, 8000, 300) < 1e-3);
    CHECK(wang_universality_check(kPi / 4, kPi / 3, 8000, 300) < 1e-3);

    // the scale factor formula at alpha = theta is exactly 1
    const double theta = kPi / 3;
    const double r = std::sqrt(std::pow(std::sin(theta), 3) / std::cos(theta) *
                               std::cos(theta) / std::pow(std::sin(theta), 3));
    CHECK(r == doctest::Approx(1.0));
}

TEST_CASE("truncation universality of the welding curve") {
    CHECK(emw_universality_check(0.5) < 1e-4);
    CHECK(emw_universality_check(0.25) < 1e-4);
    CHECK(emw_universality_check(0.75) < 1e-4);
}

TEST_CASE("terminal angle of the centered tip image") {
    // zero driver: the tip image sits on the imaginary axis throughout
    const auto vert = even_angle_check(zero_driver(0.25), 0.25, 64);
    for (const auto& [t, ang] : vert)
        CHECK(ang == doctest::Approx(kPi / 2).epsilon(1e-9));

    Driver lin;
    lin.value = [](double t) { return t; };
    lin.slope = [](double) { return 1.0; };
    lin.horizon = 0.5;
    const auto smooth = even_angle_check(lin, 0.5, 256);
    CHECK(std::abs(smooth.back().second - kPi / 2) < 0.05);

    const Driver wl = wang_lambda_down(kPi / 3);
    const auto wang = even_angle_check(wl, wl.horizon, 256);
    CHECK(std::abs(wang.back().second - kPi / 2) < 0.05);
}
