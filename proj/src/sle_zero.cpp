#include "loewner/sle_zero.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "loewner/driver_library.hpp"
#include "loewner/io.hpp"

namespace loewner {

namespace {

constexpr double kCollisionTol = 1e-9;
constexpr double kMinStep = 1e-17;
constexpr double kDriverIncrementStop = 1e-12;

struct State {
    double t;
    double lam;
    std::vector<cplx> u;
};

struct Deriv {
    double lam;
    std::vector<cplx> u;
};

Deriv rhs(const State& s, const std::vector<double>& rho, double sign) {
    // sign = +1 downward, -1 upward.
    Deriv d;
    d.lam = 0.0;
    d.u.resize(s.u.size());
    for (size_t j = 0; j < s.u.size(); ++j) {
        const cplx inv = 1.0 / (s.u[j] - s.lam);
        d.lam += -sign * rho[j] * inv.real();
        d.u[j] = sign * 2.0 * inv;
    }
    return d;
}

State advance(const State& s, const Deriv& d, double h) {
    State out;
    out.t = s.t + h;
    out.lam = s.lam + h * d.lam;
    out.u.resize(s.u.size());
    for (size_t j = 0; j < s.u.size(); ++j) out.u[j] = s.u[j] + h * d.u[j];
    return out;
}

double min_gap(const State& s) {
    double g = std::numeric_limits<double>::infinity();
    for (const auto& u : s.u) g = std::min(g, std::abs(u - s.lam));
    return g;
}

bool state_ok(const State& before, const State& after) {
    if (!std::isfinite(after.lam)) return false;
    for (size_t j = 0; j < after.u.size(); ++j) {
        const cplx u = after.u[j];
        if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) return false;
        // Force points on R stay on R by construction; points in H must not
        // cross into the lower half-plane before collision.
        if (before.u[j].imag() > 0 && u.imag() < 0) return false;
    }
    return true;
}

}  // namespace

SleZeroTrajectory sle_integrate(const SleZeroConfig& config, double horizon,
                                int n) {
    const size_t m = config.rho.size();
    if (m < 1 || m != config.start_force_points.size())
        throw std::invalid_argument("sle_integrate: need n >= 1 force points");
    if (n < 1) throw std::invalid_argument("sle_integrate: n must be >= 1");

    const double sign = config.direction == FlowDirection::down ? +1.0 : -1.0;
    double rho_sum = 2.0;
    for (double r : config.rho) rho_sum += std::abs(r);

    State s{0.0, config.start_driver, config.start_force_points};
    if (min_gap(s) <= kCollisionTol)
        throw std::invalid_argument("sle_integrate: immediate collision at t = 0");

    SleZeroTrajectory traj;
    traj.direction = config.direction;
    traj.rho = config.rho;
    traj.force_points.resize(m);
    auto record = [&](const State& st) {
        traj.times.push_back(st.t);
        traj.driver.push_back(st.lam);
        for (size_t j = 0; j < m; ++j) traj.force_points[j].push_back(st.u[j]);
    };
    record(s);

    const double h0 = horizon / n;
    bool collided = false;
    double collision_time = 0.0;

    for (int k = 1; k <= n && !collided; ++k) {
        const double t_target = horizon * k / n;
        while (s.t < t_target) {
            const double gap = min_gap(s);
            if (gap <= kCollisionTol) {
                collided = true;
                collision_time = s.t + 0.25 * gap * gap;
                break;
            }
            const double remaining = t_target - s.t;
            if (remaining <= 4e-16 * std::max(1.0, t_target)) {
                s.t = t_target;
                break;
            }
            double h = std::min(h0, remaining);
            h = std::min(h, gap * gap / (10.0 * rho_sum));
            for (;;) {
                if (h < kMinStep) {
                    collided = true;
                    collision_time = s.t + 0.25 * gap * gap;
                    break;
                }
                const Deriv k1 = rhs(s, config.rho, sign);
                const State s2 = advance(s, k1, 0.5 * h);
                if (!state_ok(s, s2) || min_gap(s2) <= 0) { h *= 0.5; continue; }
                const Deriv k2 = rhs(s2, config.rho, sign);
                const State s3 = advance(s, k2, 0.5 * h);
                if (!state_ok(s, s3) || min_gap(s3) <= 0) { h *= 0.5; continue; }
                const Deriv k3 = rhs(s3, config.rho, sign);
                const State s4 = advance(s, k3, h);
                if (!state_ok(s, s4) || min_gap(s4) <= 0) { h *= 0.5; continue; }
                const Deriv k4 = rhs(s4, config.rho, sign);
                State next = s;
                next.t += h;
                next.lam += h / 6.0 * (k1.lam + 2 * k2.lam + 2 * k3.lam + k4.lam);
                for (size_t j = 0; j < m; ++j)
                    next.u[j] += h / 6.0 *
                                 (k1.u[j] + 2.0 * k2.u[j] + 2.0 * k3.u[j] + k4.u[j]);
                const double gap_n = min_gap(next);
                if (!state_ok(s, next) || gap_n < 0.25 * gap) { h *= 0.5; continue; }
                const double dlam = std::abs(next.lam - s.lam);
                s = next;
                if (gap_n <= kCollisionTol ||
                    (dlam < kDriverIncrementStop && gap_n < 1e-6)) {
                    collided = true;
                    collision_time = s.t + 0.25 * gap_n * gap_n;
                }
                break;
            }
            if (collided) break;
        }
        if (!collided) record(s);
    }

    if (collided) {
        record(s);
        traj.stop_reason = StopReason::collision;
        traj.stop_time = collision_time;
    } else {
        traj.stop_reason = StopReason::horizon;
        traj.stop_time = s.t;
    }
    return traj;
}

SleZeroTrajectory reverse_trajectory(const SleZeroTrajectory& traj) {
    if (traj.times.empty())
        throw std::invalid_argument("reverse_trajectory: empty trajectory");
    SleZeroTrajectory out;
    out.direction = traj.direction == FlowDirection::down ? FlowDirection::up
                                                          : FlowDirection::down;
    out.rho = traj.rho;
    const size_t n = traj.times.size();
    const double T = traj.times.back();
    const double lamT = traj.driver.back();
    out.force_points.resize(traj.force_points.size());
    for (size_t i = 0; i < n; ++i) {
        const size_t k = n - 1 - i;
        out.times.push_back(T - traj.times[k]);
        out.driver.push_back(traj.driver[k] - lamT);
        for (size_t j = 0; j < traj.force_points.size(); ++j)
            out.force_points[j].push_back(traj.force_points[j][k] - lamT);
    }
    out.stop_reason = traj.stop_reason;
    out.stop_time = T;
    return out;
}

ResidualReport verify_wang_sle8(double theta, int n) {
    const WangParams params(theta);
    SleZeroConfig config;
    config.direction = FlowDirection::down;
    config.rho = {-8.0};
    config.start_force_points = {std::polar(1.0, theta)};
    const double T = 0.9 * params.tau;
    const auto traj = sle_integrate(config, T, n);
    const Driver lam = wang_lambda_down(theta);
    ResidualReport rep;
    for (size_t i = 0; i < traj.times.size(); ++i) {
        const double err = std::abs(traj.driver[i] - lam.value(traj.times[i]));
        if (err > rep.sup_error) {
            rep.sup_error = err;
            rep.at_time = traj.times[i];
        }
    }
    return rep;
}

ArcSleReport verify_arc_sle33(int n) {
    ArcSleReport rep;
    const Driver arc = arc22_driver();
    for (int k = 1; k <= 99; ++k) {
        const double t = 0.9 * k / 99.0 + 0.005;
        const auto [gm, gp] = arc22_base_images(t);
        const double lam = arc.value(t);
        const double resid = std::abs(arc.slope(t) - 3.0 / (gm - lam) - 3.0 / (gp - lam));
        rep.identity_residual = std::max(rep.identity_residual, resid);
    }

    const double t0 = 0.05;
    SleZeroConfig config;
    config.direction = FlowDirection::down;
    config.rho = {-3.0, -3.0};
    config.start_driver = arc.value(t0);
    const auto [gm0, gp0] = arc22_base_images(t0);
    config.start_force_points = {cplx(gm0, 0.0), cplx(gp0, 0.0)};
    const auto traj = sle_integrate(config, 0.9 - t0, n);
    for (size_t i = 0; i < traj.times.size(); ++i) {
        const double err = std::abs(traj.driver[i] - arc.value(t0 + traj.times[i]));
        rep.sup_error = std::max(rep.sup_error, err);
    }

    SleZeroConfig sym;
    sym.direction = FlowDirection::up;
    sym.rho = {-3.0, -3.0};
    sym.start_force_points = {cplx(-1.0, 0.0), cplx(1.0, 0.0)};
    const auto straj = sle_integrate(sym, 0.24, n);
    for (double v : straj.driver)
        rep.symmetric_driver_max = std::max(rep.symmetric_driver_max, std::abs(v));
    return rep;
}

std::string SleZeroTrajectory::to_csv() const {
    std::string out = "t,xi";
    for (size_t j = 0; j < force_points.size(); ++j) {
        const std::string k = std::to_string(j + 1);
        out += ",v" + k + "_re,v" + k + "_im";
    }
    out += "\n";
    for (size_t i = 0; i < times.size(); ++i) {
        out += format_double(times[i]);
        out += ",";
        out += format_double(driver[i]);
        for (size_t j = 0; j < force_points.size(); ++j) {
            out += ",";
            out += format_double(force_points[j][i].real());
            out += ",";
            out += format_double(force_points[j][i].imag());
        }
        out += "\n";
    }
    return out;
}

}  // namespace loewner
