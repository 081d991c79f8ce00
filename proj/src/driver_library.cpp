#include "loewner/driver_library.hpp"

#include <cmath>
#include <stdexcept>

namespace loewner {

namespace {

constexpr double kDegenerate = 1e-12;

void check_theta(double theta) {
    if (!(theta > 0.0) || !(theta < kPi))
        throw std::invalid_argument("theta must lie in (0, pi)");
}

double wang_tau(double theta) { return (1.0 - 0.5 * std::cos(2.0 * theta)) / 6.0; }

// Real root of u^3 + 3A u - 6A u_arg ... written as the cancellation-free
// difference of Cardano cube roots: P - Q = 2u / (P^2 + Q^2 + A^(1/3)).
double cardano_diff(double u, double A) {
    const double disc = std::sqrt(u * u + A);
    const double P = std::cbrt(disc + u);
    const double Q = std::cbrt(disc - u);
    return 2.0 * u / (P * P + Q * Q + std::cbrt(A));
}

// Centered downward image of e^{i theta} for 0 < theta < pi/2 at time s.
void wang_xy(double theta, double s, double& x, double& y) {
    const double tau = wang_tau(theta);
    const double sin3 = std::pow(std::sin(theta), 3);
    const double A = sin3 * sin3 / (std::cos(theta) * std::cos(theta));
    const double u = 6.0 * std::max(0.0, tau - s);
    const double y2 = std::cbrt(A) * cardano_diff(u, A);
    y = std::sqrt(std::max(0.0, y2));
    x = (std::cos(theta) / sin3) * y2 * y;
}

double wang_lambda_value(double theta, double t) {
    // (4/3) cos(theta) - (4/3) x(t), with x from the Cardano root.
    double x, y;
    wang_xy(theta, t, x, y);
    return (4.0 / 3.0) * std::cos(theta) - (4.0 / 3.0) * x;
}

double wang_lambda_slope(double theta, double t) {
    double x, y;
    wang_xy(theta, t, x, y);
    const double r2 = x * x + y * y;
    if (r2 == 0.0) return 0.0;
    return 8.0 * x / r2;
}

}  // namespace

WangParams::WangParams(double th) : theta(th) {
    check_theta(th);
    tau = wang_tau(th);
    terminal_xi = -(4.0 / 3.0) * std::cos(th);
}

EmwParams::EmwParams(double x0_, double y0_) : x0(x0_), y0(y0_) {
    if (!(x0 < 0.0) || !(y0 > 0.0))
        throw std::invalid_argument("emw: need x0 < 0 < y0");
    r = -x0 / y0;
    tau = (x0 * x0 - 4.0 * x0 * y0 + y0 * y0) / 24.0;
    terminal_lambda = -(2.0 / 3.0) * (x0 + y0);
}

Driver wang_xi(double theta) {
    check_theta(theta);
    if (std::abs(theta - kPi / 2) < kDegenerate) {
        Driver d = zero_driver(0.25);
        d.label = "wang_xi";
        return d;
    }
    if (theta > kPi / 2) {
        Driver d = wang_xi(kPi - theta);
        auto v = d.value;
        auto s = d.slope;
        d.value = [v](double t) { return -v(t); };
        d.slope = [s](double t) { return -s(t); };
        return d;
    }
    const double tau = wang_tau(theta);
    const double sin3 = std::pow(std::sin(theta), 3);
    const double B = sin3 * sin3 / (36.0 * std::cos(theta) * std::cos(theta));
    const double amp = 4.0 * std::sqrt(2.0) / std::sqrt(3.0);
    Driver d;
    d.value = [B, amp](double t) {
        t = std::max(0.0, t);
        return -amp * std::pow(cardano_diff(t, B), 1.5);
    };
    d.slope = [theta, tau](double t) { return -wang_lambda_slope(theta, tau - t); };
    d.horizon = tau;
    d.label = "wang_xi";
    d.sqrt_start = true;
    return d;
}

Driver wang_lambda_down(double theta) {
    check_theta(theta);
    if (std::abs(theta - kPi / 2) < kDegenerate) {
        Driver d = zero_driver(0.25);
        d.label = "wang_lambda";
        return d;
    }
    if (theta > kPi / 2) {
        Driver d = wang_lambda_down(kPi - theta);
        auto v = d.value;
        auto s = d.slope;
        d.value = [v](double t) { return -v(t); };
        d.slope = [s](double t) { return -s(t); };
        return d;
    }
    Driver d;
    d.value = [theta](double t) { return wang_lambda_value(theta, t); };
    d.slope = [theta](double t) { return wang_lambda_slope(theta, t); };
    d.horizon = wang_tau(theta);
    d.label = "wang_lambda";
    d.sqrt_end = true;
    return d;
}

cplx wang_tip_image(double theta, double t) {
    check_theta(theta);
    const double tau = wang_tau(theta);
    if (t < 0 || t > tau * (1.0 + 1e-12))
        throw std::invalid_argument("wang_tip_image: t outside [0, tau]");
    if (std::abs(theta - kPi / 2) < kDegenerate)
        return cplx(0.0, std::sqrt(std::max(0.0, 1.0 - 4.0 * t)));
    if (theta > kPi / 2) {
        cplx z = wang_tip_image(kPi - theta, t);
        return cplx(-z.real(), z.imag());
    }
    double x, y;
    wang_xy(theta, t, x, y);
    return cplx(x, y);
}

Driver gamma0_xi() {
    Driver d;
    const double amp = 8.0 / std::sqrt(3.0);
    d.value = [amp](double t) { return -amp * std::sqrt(std::max(0.0, t)); };
    d.slope = [amp](double t) { return -0.5 * amp / std::sqrt(t); };
    d.horizon = 1.0 / 12.0;
    d.label = "gamma0_xi";
    d.sqrt_start = true;
    d.slope_unbounded_start = true;
    return d;
}

namespace {

double emw_lambda_value(double x0, double y0, double t) {
    t = std::max(0.0, t);
    const double sum = y0 + x0;
    const double diff = y0 - x0;
    const double d6 = std::pow(diff, 6) / (576.0 * sum * sum);
    double radicand = d6 - t * t;
    if (radicand < 0) {
        if (radicand < -1e-14 * d6)
            throw std::invalid_argument("emw driver: t beyond the hitting time");
        radicand = 0.0;
    }
    const cplx w(std::sqrt(radicand), t);
    const double first = diff * diff / (std::pow(24.0, 2.0 / 3.0) *
                                        std::pow(std::abs(sum), 2.0 / 3.0));
    const double bracket = first + 2.0 * std::pow(w, 2.0 / 3.0).real();
    const double sign = sum > 0 ? 1.0 : -1.0;
    return -(16.0 / std::sqrt(3.0)) * sign * std::pow(t, 1.5) *
           std::pow(bracket, -1.5);
}

// d lambda/dt = -16 lambda / (lambda^2 - (32/3) t); the denominator equals
// (8/3) x_t y_t and stays strictly negative on [0, tau].
double emw_lambda_slope(double lam, double t) {
    if (t == 0.0) return 0.0;
    return -16.0 * lam / (lam * lam - (32.0 / 3.0) * t);
}

}  // namespace

Driver emw_lambda(double x0, double y0) {
    const EmwParams p(x0, y0);
    if (std::abs(x0 + y0) < kDegenerate * (y0 - x0)) {
        Driver d = zero_driver(p.tau);
        d.label = "emw_lambda";
        return d;
    }
    Driver d;
    d.value = [x0, y0](double t) { return emw_lambda_value(x0, y0, t); };
    d.slope = [x0, y0](double t) {
        return emw_lambda_slope(emw_lambda_value(x0, y0, t), t);
    };
    d.horizon = p.tau;
    d.label = "emw_lambda";
    d.sqrt_start = true;
    return d;
}

Driver universal_gamma_lambda() {
    const double T = kPi / 6.0;
    Driver d;
    d.value = [T](double t) {
        t = std::max(0.0, t);
        double radicand = std::max(0.0, T * T - t * t);
        const cplx w(std::sqrt(radicand), t);
        const double bracket =
            std::pow(T, 2.0 / 3.0) + 2.0 * std::pow(w, 2.0 / 3.0).real();
        return -(16.0 / std::sqrt(3.0)) * std::pow(t, 1.5) * std::pow(bracket, -1.5);
    };
    auto v = d.value;
    d.slope = [v](double t) { return emw_lambda_slope(v(t), t); };
    d.horizon = T;
    d.label = "universal_gamma";
    d.sqrt_start = true;
    d.sqrt_end = true;
    d.slope_unbounded_end = true;
    return d;
}

double universal_truncation_time(double r) {
    if (!(r > 0.0) || !(r < 1.0))
        throw std::invalid_argument("universal_truncation_time: r in (0,1)");
    return (kPi / 6.0) * (1.0 - r) * (r * r + 4.0 * r + 1.0) /
           std::pow(1.0 + r, 3);
}

double universal_truncation_driver_value(double r) {
    return -(4.0 * std::sqrt(kPi) / 3.0) * std::pow((1.0 - r) / (1.0 + r), 1.5);
}

Driver circular_arc_driver() {
    Driver d;
    d.value = [](double t) {
        return 1.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 8.0 * t)));
    };
    d.slope = [](double t) { return 6.0 / std::sqrt(1.0 - 8.0 * t); };
    d.horizon = 0.125;
    d.label = "circular_arc";
    d.sqrt_end = true;
    d.slope_unbounded_end = true;
    return d;
}

double arc_time_for_angle(double theta) {
    if (!(theta > 0.0) || theta > kPi / 2 + 1e-15)
        throw std::invalid_argument("arc_time_for_angle: theta in (0, pi/2]");
    const double s = std::sin(theta);
    return (1.0 - s * s * s * s) / 8.0;
}

double arc_time_for_ratio(double alpha) {
    if (!(alpha > 0.0) || alpha > 0.5 + 1e-15)
        throw std::invalid_argument("arc_time_for_ratio: alpha in (0, 1/2]");
    return 0.125 - 2.0 * alpha * alpha * (1.0 - alpha) * (1.0 - alpha);
}

std::pair<double, double> arc_weld_endpoints(double t) {
    const double q = std::sqrt(1.0 - 8.0 * t);
    const double root = std::sqrt(1.0 - q);
    return {-1.0 + q - root, -1.0 + q + root};
}

double arc_weld(double t, double x) {
    const double q = std::sqrt(1.0 - 8.0 * t);
    return -q * x / (q - 2.0 * x);
}

Driver arc22_driver() {
    Driver d = scale_driver(circular_arc_driver(), 2.0 * std::sqrt(2.0));
    d.label = "circular_arc_22";
    return d;
}

std::pair<double, double> arc22_base_images(double t) {
    const double s2 = std::sqrt(2.0);
    const double q = std::sqrt(1.0 - t);
    const double root = 2.0 * s2 * std::sqrt(1.0 - q);
    const double mid = s2 - s2 * q;
    return {mid - root, mid + root};
}

Driver sqrt_driver(double c, double horizon) {
    Driver d;
    d.value = [c](double t) { return c * std::sqrt(std::max(0.0, t)); };
    d.slope = [c](double t) { return 0.5 * c / std::sqrt(t); };
    d.horizon = horizon;
    d.label = "sqrt";
    d.sqrt_start = true;
    if (c != 0.0) d.slope_unbounded_start = true;
    return d;
}

double sqrt_alpha(double c) { return 0.5 - c / (2.0 * std::sqrt(c * c + 16.0)); }

double sqrt_c(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("sqrt_c: alpha in (0,1)");
    return 2.0 * (1.0 - 2.0 * alpha) / std::sqrt(alpha * (1.0 - alpha));
}

std::pair<double, double> sqrt_weld_endpoints(double alpha, double t) {
    const double rt = std::sqrt(t);
    return {-2.0 * std::sqrt((1.0 - alpha) / alpha) * rt,
            2.0 * std::sqrt(alpha / (1.0 - alpha)) * rt};
}

}  // namespace loewner
