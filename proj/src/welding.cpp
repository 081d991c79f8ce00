#include "loewner/welding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "loewner/driver_library.hpp"
#include "loewner/flow.hpp"
#include "loewner/io.hpp"

namespace loewner {

namespace {

// Hitting time of x under the upward flow of xi, restricted to [0, cap] for
// efficiency; nullopt means "after cap".
std::optional<double> hit_before(const Driver& xi, double x, double cap) {
    Driver d = xi;
    d.horizon = std::min(xi.horizon, cap);
    return hitting_time(d, x, 2048);
}

// Invert the (monotone in |x|) hitting-time map on one side of the origin.
double invert_hitting(const Driver& xi, double tau, bool left) {
    if (!(tau > 0) || tau > xi.horizon * (1.0 + 1e-9))
        throw std::invalid_argument("welded point: tau outside (0, horizon]");
    tau = std::min(tau, xi.horizon);
    const double cap = std::min(xi.horizon, tau * (1.0 + 1e-6) + 1e-15);
    const double sgn = left ? -1.0 : 1.0;
    auto tau_of = [&](double a) {
        auto t = hit_before(xi, sgn * a, cap);
        return t ? *t : std::numeric_limits<double>::infinity();
    };
    // a parametrizes |x|; hitting time is increasing in a.
    double lo = 2.0 * std::sqrt(tau), hi = lo;
    for (int i = 0; i < 200 && tau_of(lo) >= tau; ++i) lo *= 0.8;
    for (int i = 0; i < 200 && tau_of(hi) < tau; ++i) hi *= 1.25;
    const double a = bisect([&](double v) { return tau_of(v) - tau; }, lo, hi,
                            1e-15 * std::max(1.0, hi));
    return sgn * a;
}

}  // namespace

double welded_left_at_time(const Driver& xi, double tau) {
    return invert_hitting(xi, tau, true);
}

double welded_right_at_time(const Driver& xi, double tau) {
    return invert_hitting(xi, tau, false);
}

std::pair<double, double> welded_pair_at_time(const Driver& xi, double tau) {
    return {welded_left_at_time(xi, tau), welded_right_at_time(xi, tau)};
}

WeldingMap weld_from_driver(const Driver& xi, double T, int n_pairs) {
    if (n_pairs < 1) throw std::invalid_argument("weld_from_driver: n_pairs >= 1");
    WeldingMap map;
    map.x_outer = welded_left_at_time(xi, T);
    map.y_outer = welded_right_at_time(xi, T);

    map.pairs.resize(n_pairs);
    map.pairs[0] = WeldingPair{map.x_outer, map.y_outer, T, true};
    parallel_for(n_pairs - 1, [&](int idx) {
        const int i = idx + 1;  // pair 0 is the outermost, fixed above
        const double x = map.x_outer * (n_pairs - i) / n_pairs;
        WeldingPair pair;
        pair.x = x;
        try {
            auto tau = hit_before(xi, x, T * (1.0 + 1e-6) + 1e-15);
            if (!tau) throw std::runtime_error("no collision before T");
            pair.tau = *tau;
            pair.y = welded_right_at_time(xi, pair.tau);
        } catch (const std::exception&) {
            pair.ok = false;
        }
        map.pairs[i] = pair;
    });
    for (const auto& p : map.pairs)
        if (!p.ok) ++map.failed_pairs;
    return map;
}

double wang_weld(double theta, double x) {
    if (!(theta > 0) || !(theta < kPi))
        throw std::invalid_argument("wang_weld: theta in (0, pi)");
    if (x > 1e-15) throw std::invalid_argument("wang_weld: x must be <= 0");
    const double b = std::cos(theta) / std::pow(std::sin(theta), 3);
    return -x / std::sqrt(1.0 + kPi * b * x * x);
}

std::pair<double, double> wang_weld_endpoints(double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    const double s3 = s * s * s;
    return {-std::sqrt(s3) / std::sqrt(s - theta * c),
            std::sqrt(s3) / std::sqrt(s + (kPi - theta) * c)};
}

double emw_weld_W(double r, double u) {
    if (!(u < 0)) throw std::invalid_argument("emw_weld_W: u must be negative");
    return r * u + 1.0 / u + (1.0 - r) * std::log(-u);
}

namespace {

double emw_weld_forward(double x0, double y0, double x) {
    // r < 1 here; phi maps [x0, 0] onto [0, y0].
    const double r = -x0 / y0;
    const double s = y0 / x0;  // fixed point of the conjugated welding
    if (x >= -1e-15) return 0.0;
    if (x < x0 * (1.0 + 1e-12))
        throw std::invalid_argument("emw_weld_solve: x outside [x0, 0]");
    if (x - x0 < 1e-13 * (-x0)) return y0;
    auto T = [&](double u) { return (u - y0) / (u - x0); };
    auto Tinv = [&](double w) { return (x0 * w - y0) / (w - 1.0); };
    const double xt = T(x);  // in (-inf, s)
    const double target = emw_weld_W(r, xt);
    // W(r, .) decreases from its maximum at s toward -inf at 0-.
    double hi = 0.5 * s;
    for (int i = 0; i < 4000 && emw_weld_W(r, hi) > target; ++i) hi *= 0.5;
    const double ut = bisect(
        [&](double u) { return emw_weld_W(r, u) - target; }, s, hi, 1e-17);
    return Tinv(ut);
}

}  // namespace

double emw_weld_solve(double x0, double y0, double x) {
    const EmwParams p(x0, y0);
    if (std::abs(p.r - 1.0) < 1e-12) return -x;
    if (p.r < 1.0) return emw_weld_forward(x0, y0, x);
    // Reflect across the imaginary axis and invert the reflected welding.
    const double a = -y0, b = -x0;  // reflected pair, ratio 1/r < 1
    const double w = -x;            // target value of the reflected welding
    if (w <= 1e-15) return 0.0;
    const double u = bisect(
        [&](double v) { return emw_weld_forward(a, b, v) - w; }, a, -1e-300,
        1e-17);
    return -u;
}

RatioTrajectory ratio_trajectory(const Driver& xi, double x0, double y0, int n) {
    if (!(x0 < 0) || !(y0 > 0))
        throw std::invalid_argument("ratio_trajectory: need x0 < 0 < y0");
    RatioTrajectory out;
    const auto px = flow_real_path(xi, x0, false, xi.horizon, n);
    const auto py = flow_real_path(xi, y0, false, xi.horizon, n);
    const size_t m = std::min(px.times.size(), py.times.size());
    for (size_t i = 0; i < m; ++i) {
        const double t = px.times[i];
        const double x = px.values[i] - xi.value(t);
        const double y = py.values[i] - xi.value(t);
        out.times.push_back(t);
        out.ratios.push_back(-x / y);
    }
    out.collided = px.collided || py.collided;
    if (out.collided)
        out.collision_time = px.collided ? px.collision_time : py.collision_time;
    return out;
}

WeldingExpansionReport infinitesimal_welding_check(
    const Driver& xi, const std::vector<double>& deltas) {
    auto slope0 = xi.slope_at(0.0);
    if (!slope0 || *slope0 == 0.0)
        throw std::invalid_argument(
            "infinitesimal_welding_check: need a driver with xi'(0) != 0");
    const double a = *slope0;
    WeldingExpansionReport rep;
    rep.deltas = deltas;
    std::vector<double> lx, ly, ld;
    for (double d : deltas) {
        const auto [u, v] = welded_pair_at_time(xi, d);
        const double rt = std::sqrt(d);
        const double x_exp = -2.0 * rt + (2.0 / 3.0) * a * d -
                             (1.0 / 18.0) * a * a * d * rt;
        const double y_exp = 2.0 * rt + (2.0 / 3.0) * a * d +
                             (1.0 / 18.0) * a * a * d * rt;
        rep.residual_x.push_back(std::abs(u - x_exp));
        rep.residual_y.push_back(std::abs(v - y_exp));
        ld.push_back(std::log(d));
        lx.push_back(std::log(std::max(rep.residual_x.back(), 1e-300)));
        ly.push_back(std::log(std::max(rep.residual_y.back(), 1e-300)));
    }
    rep.slope_x = fit_slope(ld, lx);
    rep.slope_y = fit_slope(ld, ly);
    return rep;
}

std::string welding_csv(const WeldingMap& map) {
    std::string out = "x,y,tau\n";
    for (const auto& p : map.pairs) {
        if (!p.ok) continue;
        out += format_double(p.x);
        out += ",";
        out += format_double(p.y);
        out += ",";
        out += format_double(p.tau);
        out += "\n";
    }
    return out;
}

}  // namespace loewner
