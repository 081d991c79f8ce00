#include "loewner/families.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "loewner/driver_library.hpp"
#include "loewner/welding.hpp"

namespace loewner {

namespace {

// Fixed-step RK4 for a small autonomous real system.
template <int N, typename F>
std::array<double, N> rk4_step(const std::array<double, N>& s, double h, F f) {
    auto add = [](std::array<double, N> a, const std::array<double, N>& b,
                  double c) {
        for (int i = 0; i < N; ++i) a[i] += c * b[i];
        return a;
    };
    const auto k1 = f(s);
    const auto k2 = f(add(s, k1, 0.5 * h));
    const auto k3 = f(add(s, k2, 0.5 * h));
    const auto k4 = f(add(s, k3, h));
    std::array<double, N> out = s;
    for (int i = 0; i < N; ++i)
        out[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return out;
}

}  // namespace

WangOde wang_ode_solve(double theta, int n, double t_end) {
    const WangParams p(theta);
    if (t_end < 0) t_end = 0.9 * p.tau;
    if (t_end > p.tau)
        throw std::invalid_argument("wang_ode_solve: t_end beyond tau");
    auto f = [](const std::array<double, 3>& s) {
        const double x = s[1], y = s[2];
        const double r2 = x * x + y * y;
        return std::array<double, 3>{8.0 * x / r2, -6.0 * x / r2, -2.0 * y / r2};
    };
    WangOde out;
    std::array<double, 3> s{0.0, std::cos(theta), std::sin(theta)};
    const double h = t_end / n;
    out.times.push_back(0.0);
    out.lambda.push_back(s[0]);
    out.x.push_back(s[1]);
    out.y.push_back(s[2]);
    for (int k = 1; k <= n; ++k) {
        s = rk4_step<3>(s, h, f);
        out.times.push_back(t_end * k / n);
        out.lambda.push_back(s[0]);
        out.x.push_back(s[1]);
        out.y.push_back(s[2]);
    }
    return out;
}

EmwOde emw_ode_solve(double x0, double y0, int n, double t_end) {
    const EmwParams p(x0, y0);
    if (t_end < 0) t_end = 0.9 * p.tau;
    if (t_end > p.tau)
        throw std::invalid_argument("emw_ode_solve: t_end beyond tau");
    auto f = [](const std::array<double, 3>& s) {
        const double x = s[1], y = s[2];
        return std::array<double, 3>{-4.0 / x - 4.0 / y, 2.0 / x + 4.0 / y,
                                     4.0 / x + 2.0 / y};
    };
    EmwOde out;
    std::array<double, 3> s{0.0, x0, y0};
    const double h = t_end / n;
    out.times.push_back(0.0);
    out.xi.push_back(s[0]);
    out.x.push_back(s[1]);
    out.y.push_back(s[2]);
    for (int k = 1; k <= n; ++k) {
        s = rk4_step<3>(s, h, f);
        out.times.push_back(t_end * k / n);
        out.xi.push_back(s[0]);
        out.x.push_back(s[1]);
        out.y.push_back(s[2]);
    }
    return out;
}

double variety_residual_gamma0(cplx p) {
    const double x = p.real(), y = p.imag();
    return (4.0 - 3.0 * x) * y * y - 3.0 * x * (x - 1.0) * (x - 1.0);
}

cplx rational_map_R(cplx z) { return z * z * (z - 3.0) / (1.0 - 3.0 * z); }

double variety_residual_universal(cplx p) {
    const double x = p.real(), y = p.imag();
    const double r2 = x * x + y * y;
    return r2 * r2 + 4.0 * x * y;
}

double universal_square_circle_residual(cplx p) {
    return std::abs(std::abs(p * p - cplx(0.0, -1.0)) - 1.0);
}

double wang_universality_check(double theta, double alpha, int n, int samples) {
    const WangParams pt(theta), pa(alpha);
    if (std::abs(theta - kPi / 2) < 1e-12 || std::abs(alpha - kPi / 2) < 1e-12)
        throw std::invalid_argument("wang_universality_check: theta, alpha != pi/2");
    const double sin3t = std::pow(std::sin(theta), 3);
    const double sin3a = std::pow(std::sin(alpha), 3);
    const double t_alpha = sin3t * std::cos(alpha) /
                           (6.0 * std::cos(theta) * sin3a) *
                           (1.0 - 0.5 * std::cos(2.0 * alpha));
    const double r = std::sqrt(sin3t * std::cos(alpha) /
                               (std::cos(theta) * sin3a));

    // The xi formula extends past the curve's own hitting time; for alpha on
    // the far side of theta the truncation point lies beyond tau(theta).
    Driver xi = wang_xi(theta);
    if (t_alpha > xi.horizon) {
        xi.horizon = t_alpha;
        xi.slope = nullptr;  // the closed-form slope is only valid up to tau
    }
    const Driver down_trunc = reverse_driver(restrict_driver(xi, t_alpha));
    const CurveTrace a = trace_curve(down_trunc, t_alpha, n, samples);
    const CurveTrace b = trace_curve(wang_lambda_down(alpha), pa.tau, n, samples);

    double sup = 0.0;
    for (size_t i = 0; i < a.points.size() && i < b.points.size(); ++i)
        sup = std::max(sup, std::abs(a.points[i] - r * b.points[i]));
    return sup;
}

double emw_universality_check(double r) {
    const double T = universal_truncation_time(r);
    const Driver gamma = restrict_driver(universal_gamma_lambda(), T);
    const Driver xi = reverse_driver(gamma);
    const auto [u, v] = welded_pair_at_time(xi, T);
    return std::abs(-u / v - r);
}

std::vector<std::pair<double, double>> even_angle_check(const Driver& lam,
                                                        double T, int grid) {
    const cplx tip = tip_point(lam, T);
    const double t_last = T * (1.0 - 1e-4);
    const auto path = flow_complex_path(lam, tip, true, t_last, grid);
    std::vector<std::pair<double, double>> out;
    out.reserve(path.times.size());
    for (size_t i = 0; i < path.times.size(); ++i) {
        const cplx centered = path.values[i] - lam.value(path.times[i]);
        out.emplace_back(path.times[i], std::arg(centered));
    }
    return out;
}

}  // namespace loewner
