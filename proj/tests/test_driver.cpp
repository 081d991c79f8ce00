#include <doctest.h>

#include <cmath>

#include "loewner/driver.hpp"
#include "loewner/driver_library.hpp"
#include "loewner/numerics.hpp"

using namespace loewner;

namespace {

double sup_diff(const Driver& a, const Driver& b, double T, int n = 1000) {
    double worst = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double t = T * k / n;
        worst = std::max(worst, std::abs(a.value(t) - b.value(t)));
    }
    return worst;
}

}  // namespace

TEST_CASE("scaling a driver") {
    const Driver z = zero_driver(1.0);
    CHECK(sup_diff(scale_driver(z, 3.0), zero_driver(9.0), 9.0) == 0.0);

    // the sqrt family is scale-invariant: r c sqrt(t/r^2) = c sqrt(t)
    const Driver s = sqrt_driver(1.7, 1.0);
    const Driver ss = scale_driver(s, 2.5);
    CHECK(sup_diff(ss, sqrt_driver(1.7, ss.horizon), ss.horizon) < 1e-14);

    // the arc toward x=1 scaled by 2 sqrt(2): 3 sqrt(2)(1 - sqrt(1-t)) on [0,1]
    const Driver arc = scale_driver(circular_arc_driver(), 2.0 * std::sqrt(2.0));
    CHECK(arc.horizon == doctest::Approx(1.0));
    for (int k = 0; k <= 50; ++k) {
        const double t = k / 50.0;
        const double want = 3.0 * std::sqrt(2.0) * (1.0 - std::sqrt(1.0 - t));
        // the square root near the terminal time turns ulp-level rounding of
        // r^2 into ~1e-8 value differences, so the tolerance is absolute
        CHECK(arc.value(t) == doctest::Approx(want).epsilon(1e-13).scale(1e6));
    }

    CHECK_THROWS_AS(scale_driver(z, 0.0), std::invalid_argument);
}

TEST_CASE("reversing a driver") {
    CHECK(sup_diff(reverse_driver(zero_driver(1.0)), zero_driver(1.0), 1.0) == 0.0);

    // reversal of the downward point-minimizer driver is the upward one
    for (double theta : {kPi / 3, kPi / 5, 2.3}) {
        const Driver xi = wang_xi(theta);
        const Driver rev = reverse_driver(wang_lambda_down(theta));
        CHECK(sup_diff(xi, rev, xi.horizon) < 1e-12);
    }

    // reversing twice restores the driver shifted to start at zero
    const Driver lam = emw_lambda(-1.0, 2.0);
    const Driver twice = reverse_driver(reverse_driver(lam));
    CHECK(sup_diff(lam, twice, lam.horizon) < 1e-13);
    CHECK(twice.value(0.0) == doctest::Approx(0.0));

    CHECK(reverse_driver(lam).value(0.0) == 0.0);
}

TEST_CASE("slope markers at endpoint singularities") {
    const Driver g0 = gamma0_xi();
    CHECK_FALSE(g0.slope_at(0.0).has_value());
    CHECK(g0.slope_at(0.01).has_value());
    CHECK(*g0.slope_at(0.01) == doctest::Approx(-8.0 / std::sqrt(3.0) / 2.0 / 0.1));

    const Driver arc = circular_arc_driver();
    CHECK_FALSE(arc.slope_at(arc.horizon).has_value());
    CHECK(arc.slope_at(0.1).has_value());
}

TEST_CASE("closed-form slopes agree with central differences") {
    const std::vector<Driver> drivers = {
        wang_xi(kPi / 3),          wang_lambda_down(kPi / 5),
        emw_lambda(-1.0, 2.0),     emw_lambda(-3.0, 1.0),
        universal_gamma_lambda(),  circular_arc_driver(),
        sqrt_driver(std::sqrt(2.0)),
    };
    for (const auto& d : drivers) {
        for (double frac : {0.2, 0.5, 0.8}) {
            const double t = d.horizon * frac;
            const double h = 1e-6 * std::max(1.0, d.horizon);
            const double fd = (d.value(t + h) - d.value(t - h)) / (2.0 * h);
            const double cf = *d.slope_at(t);
            CHECK(std::abs(fd - cf) <=
                  1e-6 * std::max(1.0, std::abs(cf)) + 1e-9);
        }
    }
}

TEST_CASE("finite differences converge to the closed-form slope") {
    const Driver xi = wang_xi(kPi / 3);
    const double t = 0.4 * xi.horizon;
    const double exact = *xi.slope_at(t);
    double prev_err = 1e9;
    for (double h : {1e-3, 5e-4, 2.5e-4}) {
        const double fd = (xi.value(t + h) - xi.value(t - h)) / (2.0 * h);
        const double err = std::abs(fd - exact);
        CHECK(err < prev_err * 0.55);  // at least first-order decay
        prev_err = err;
    }
}

TEST_CASE("sampled continuity of library drivers") {
    for (const Driver& d : {wang_xi(1.0), emw_lambda(-0.5, 2.0), gamma0_xi()}) {
        const auto samples = sample_driver(d, d.horizon, 4000);
        CHECK(std::isfinite(samples.front().second));
        CHECK(samples.front().second == doctest::Approx(0.0));
        double biggest_jump = 0.0;
        for (size_t i = 1; i < samples.size(); ++i)
            biggest_jump = std::max(
                biggest_jump, std::abs(samples[i].second - samples[i - 1].second));
        CHECK(biggest_jump < 0.2);  // continuous at the sampling scale
    }
}

TEST_CASE("restricting a driver") {
    const Driver lam = emw_lambda(-1.0, 2.0);
    const Driver cut = restrict_driver(lam, 0.25);
    CHECK(cut.horizon == doctest::Approx(0.25));
    CHECK(cut.value(0.2) == lam.value(0.2));
    CHECK_THROWS_AS(restrict_driver(lam, lam.horizon * 2), std::invalid_argument);
}
