#include "loewner/flow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "loewner/io.hpp"

namespace loewner {

namespace {

constexpr double kCollisionTol = 1e-9;
constexpr double kMinStep = 1e-17;

struct RealFlowState {
    double x;
    double t;
    bool collided = false;
    double collision_time = 0.0;
};

// March the real point x under dx/dt = sign * 2 / (x - drv(t)) up to t1.
// sign = +1 is the downward flow, -1 the upward flow. Steps shrink
// quadratically with the gap near a collision; after the march stops at a
// gap below tol the quadratic tail (gap^2 / 4) closes the bracket and the
// midpoint is reported.
RealFlowState real_flow(const Driver& drv, double x0, double t0, double t1,
                        int steps, double sign) {
    RealFlowState s{x0, t0};
    const double span = t1 - t0;
    if (span <= 0) return s;
    const double h0 = span / std::max(1, steps);
    auto f = [&](double t, double x) { return sign * 2.0 / (x - drv.value(t)); };
    const double side = x0 - drv.value(t0) > 0 ? 1.0 : -1.0;

    while (s.t < t1) {
        double gap = std::abs(s.x - drv.value(s.t));
        if (gap <= kCollisionTol) {
            s.collided = true;
            s.collision_time = s.t + 0.25 * gap * gap;
            return s;
        }
        const double remaining = t1 - s.t;
        if (remaining <= 4e-16 * std::max(1.0, t1)) {
            s.t = t1;
            break;
        }
        double h = std::min(h0, remaining);
        h = std::min(h, gap * gap / 100.0);
        for (;;) {
            if (h < kMinStep) {
                s.collided = true;
                s.collision_time = s.t + 0.25 * gap * gap;
                return s;
            }
            const double k1 = f(s.t, s.x);
            const double x2 = s.x + 0.5 * h * k1;
            if ((x2 - drv.value(s.t + 0.5 * h)) * side <= 0) { h *= 0.5; continue; }
            const double k2 = f(s.t + 0.5 * h, x2);
            const double x3 = s.x + 0.5 * h * k2;
            if ((x3 - drv.value(s.t + 0.5 * h)) * side <= 0) { h *= 0.5; continue; }
            const double k3 = f(s.t + 0.5 * h, x3);
            const double x4 = s.x + h * k3;
            if ((x4 - drv.value(s.t + h)) * side <= 0) { h *= 0.5; continue; }
            const double k4 = f(s.t + h, x4);
            const double xn = s.x + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
            const double gap_n = (xn - drv.value(s.t + h)) * side;
            if (!std::isfinite(xn) || gap_n <= 0) { h *= 0.5; continue; }
            s.x = xn;
            s.t += h;
            break;
        }
    }
    return s;
}

struct ComplexFlowState {
    cplx z;
    double t;
    bool collided = false;
    double collision_time = 0.0;
};

ComplexFlowState complex_flow(const Driver& drv, cplx z0, double t0, double t1,
                              int steps, double sign) {
    ComplexFlowState s{z0, t0};
    const double span = t1 - t0;
    if (span <= 0) return s;
    const double h0 = span / std::max(1, steps);
    auto f = [&](double t, cplx z) { return sign * 2.0 / (z - drv.value(t)); };

    while (s.t < t1) {
        double gap = std::abs(s.z - drv.value(s.t));
        if (gap <= kCollisionTol) {
            s.collided = true;
            s.collision_time = s.t + 0.25 * gap * gap;
            return s;
        }
        const double remaining = t1 - s.t;
        if (remaining <= 4e-16 * std::max(1.0, t1)) {
            s.t = t1;
            break;
        }
        double h = std::min(h0, remaining);
        h = std::min(h, gap * gap / 100.0);
        for (;;) {
            if (h < kMinStep) {
                s.collided = true;
                s.collision_time = s.t + 0.25 * gap * gap;
                return s;
            }
            const cplx k1 = f(s.t, s.z);
            const cplx k2 = f(s.t + 0.5 * h, s.z + 0.5 * h * k1);
            const cplx k3 = f(s.t + 0.5 * h, s.z + 0.5 * h * k2);
            const cplx k4 = f(s.t + h, s.z + h * k3);
            const cplx zn = s.z + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            const double gap_n = std::abs(zn - drv.value(s.t + h));
            const bool left_domain = sign > 0 && zn.imag() < -1e-13;
            if (!std::isfinite(zn.real()) || !std::isfinite(zn.imag()) ||
                left_domain || gap_n < 0.25 * gap) {
                h *= 0.5;
                continue;
            }
            s.z = zn;
            s.t += h;
            break;
        }
    }
    return s;
}

void check_preconditions(const Driver& drv, cplx z0, double t1) {
    if (t1 < 0 || t1 > drv.horizon * (1.0 + 1e-12))
        throw std::invalid_argument("evolve: t1 outside [0, horizon]");
    if (z0.imag() < -1e-15)
        throw std::invalid_argument("evolve: z0 must lie in the closed upper half-plane");
    if (z0.imag() <= 0 && std::abs(z0.real() - drv.value(0.0)) < 1e-15)
        throw std::invalid_argument("evolve: z0 coincides with the driver start");
}

}  // namespace

FlowPoint evolve_point_down(const Driver& driver, cplx z0, double t1, int steps) {
    check_preconditions(driver, z0, t1);
    if (std::abs(z0.imag()) <= 1e-15) {
        auto s = real_flow(driver, z0.real(), 0.0, t1, steps, +1.0);
        FlowPoint p;
        p.position = s.x;
        p.alive = !s.collided;
        if (s.collided) p.swallow_time = s.collision_time;
        return p;
    }
    auto s = complex_flow(driver, z0, 0.0, t1, steps, +1.0);
    FlowPoint p;
    p.position = s.z;
    p.alive = !s.collided;
    if (s.collided) p.swallow_time = s.collision_time;
    return p;
}

FlowPoint evolve_point_up(const Driver& driver, cplx z0, double t1, int steps) {
    check_preconditions(driver, z0, t1);
    if (std::abs(z0.imag()) <= 1e-15) {
        auto s = real_flow(driver, z0.real(), 0.0, t1, steps, -1.0);
        FlowPoint p;
        p.position = s.x;
        p.alive = !s.collided;
        if (s.collided) p.swallow_time = s.collision_time;
        return p;
    }
    auto s = complex_flow(driver, z0, 0.0, t1, steps, -1.0);
    FlowPoint p;
    p.position = s.z;
    p.alive = !s.collided;
    if (s.collided) p.swallow_time = s.collision_time;
    return p;
}

std::optional<double> hitting_time(const Driver& driver, double x0, int steps) {
    if (std::abs(x0 - driver.value(0.0)) < 1e-15)
        throw std::invalid_argument("hitting_time: x0 coincides with the driver start");
    auto s = real_flow(driver, x0, 0.0, driver.horizon, steps, -1.0);
    if (!s.collided) return std::nullopt;
    return s.collision_time;
}

namespace {

// Centered elementary map for a straight slit of capacity 2*dt fitted to the
// driver increment dlam: F(u) = (u - y)^a (u - x)^(1-a), principal branches.
struct SlitMap {
    double alpha;
    double x;
    double y;
};

SlitMap fit_slit(double dt, double dlam) {
    double c = dlam / std::sqrt(dt);
    if (!std::isfinite(c)) c = 0.0;  // vanishing step, increment below roundoff
    const double alpha = 0.5 - c / (2.0 * std::sqrt(c * c + 16.0));
    SlitMap m;
    m.alpha = alpha;
    m.x = -2.0 * std::sqrt((1.0 - alpha) / alpha) * std::sqrt(dt);
    m.y = 2.0 * std::sqrt(alpha / (1.0 - alpha)) * std::sqrt(dt);
    return m;
}

inline cplx apply_slit(const SlitMap& m, cplx u) {
    return std::exp(m.alpha * std::log(u - m.y) +
                    (1.0 - m.alpha) * std::log(u - m.x));
}

// Capacity grid for the slit composition. Uniform, except that a driver with
// unbounded terminal slope (a curve landing on R) gets a geometrically graded
// tail so the final elementary hulls shrink with the blow-up.
std::vector<double> trace_grid(const Driver& driver, double T, int n) {
    std::vector<double> ts(n + 1);
    if (!driver.slope_unbounded_end || T < driver.horizon * (1.0 - 1e-12)) {
        for (int k = 0; k <= n; ++k) ts[k] = T * k / n;
        return ts;
    }
    const int m = std::max(32, n / 2);
    const double tail = T * 0.1;
    const double floor = T * 1e-8;
    for (int k = 0; k <= n - m; ++k) ts[k] = (T - tail) * k / (n - m);
    const double rho = std::pow(floor / tail, 1.0 / (m - 1));
    double rem = tail;
    for (int j = 1; j < m; ++j) {
        rem *= rho;
        ts[n - m + j] = T - rem;
    }
    ts[n] = T;
    return ts;
}

std::vector<SlitMap> build_maps(const Driver& driver, double T, int n,
                                std::vector<double>& ts, std::vector<double>& lam) {
    ts = trace_grid(driver, T, n);
    lam.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        lam[k] = driver.value(ts[k]);
        if (!std::isfinite(lam[k]))
            throw std::runtime_error("trace_curve: driver is not finite at t=" +
                                     format_double(ts[k]));
    }
    std::vector<SlitMap> maps;
    maps.reserve(n);
    for (int k = 1; k <= n; ++k)
        maps.push_back(fit_slit(ts[k] - ts[k - 1], lam[k] - lam[k - 1]));
    return maps;
}

}  // namespace

CurveTrace trace_curve(const Driver& driver, double T, int n, int samples) {
    if (T < 0 || T > driver.horizon * (1.0 + 1e-12))
        throw std::invalid_argument("trace_curve: T outside [0, horizon]");
    if (n < 1) throw std::invalid_argument("trace_curve: n must be >= 1");
    if (samples <= 0) samples = std::min(n, 2000);
    samples = std::min(samples, n);

    std::vector<double> ts, lam;
    const auto maps = build_maps(driver, T, n, ts, lam);

    std::vector<int> idx(samples);
    for (int s = 0; s < samples; ++s)
        idx[s] = static_cast<int>(std::llround(static_cast<double>(s + 1) * n / samples));

    CurveTrace trace;
    trace.times.resize(samples + 1);
    trace.points.resize(samples + 1);
    trace.times[0] = 0.0;
    trace.points[0] = lam[0];

    parallel_for(samples, [&](int s) {
        const int k = idx[s];
        cplx u = 0.0;
        for (int j = k; j >= 1; --j) u = apply_slit(maps[j - 1], u);
        if (u.imag() < 0) u = cplx(u.real(), 0.0);
        trace.times[s + 1] = ts[k];
        trace.points[s + 1] = u + lam[0];
    });
    return trace;
}

cplx tip_point(const Driver& driver, double T, int sigma_steps) {
    if (T <= 0 || T > driver.horizon * (1.0 + 1e-12))
        throw std::invalid_argument("tip_point: T outside (0, horizon]");
    const Driver xi = reverse_driver(driver, T);
    // dz/dsigma = -4 sigma / (z - xi(sigma^2)); the limit at sigma = 0 is 2i.
    auto f = [&](double sig, cplx z) -> cplx {
        if (sig == 0.0) return cplx(0.0, 2.0);
        return -4.0 * sig / (z - xi.value(sig * sig));
    };
    const double end = std::sqrt(T);
    const double h = end / sigma_steps;
    cplx z = 0.0;
    for (int k = 0; k < sigma_steps; ++k) {
        const double s0 = k * h;
        const cplx k1 = f(s0, z);
        const cplx k2 = f(s0 + 0.5 * h, z + 0.5 * h * k1);
        const cplx k3 = f(s0 + 0.5 * h, z + 0.5 * h * k2);
        const cplx k4 = f(s0 + h, z + h * k3);
        z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return z + driver.value(T);
}

RealPath flow_real_path(const Driver& driver, double x0, bool down, double T,
                        int n) {
    const double sign = down ? +1.0 : -1.0;
    RealPath path;
    path.times.push_back(0.0);
    path.values.push_back(x0);
    RealFlowState s{x0, 0.0};
    for (int k = 1; k <= n; ++k) {
        s = real_flow(driver, s.x, s.t, T * k / n, std::max(4, 4096 / n), sign);
        if (s.collided) {
            path.collided = true;
            path.collision_time = s.collision_time;
            break;
        }
        path.times.push_back(s.t);
        path.values.push_back(s.x);
    }
    return path;
}

ComplexPath flow_complex_path(const Driver& driver, cplx z0, bool down,
                              double T, int n) {
    const double sign = down ? +1.0 : -1.0;
    ComplexPath path;
    path.times.push_back(0.0);
    path.values.push_back(z0);
    ComplexFlowState s{z0, 0.0};
    for (int k = 1; k <= n; ++k) {
        s = complex_flow(driver, s.z, s.t, T * k / n, std::max(4, 4096 / n), sign);
        if (s.collided) {
            path.collided = true;
            path.collision_time = s.collision_time;
            break;
        }
        path.times.push_back(s.t);
        path.values.push_back(s.z);
    }
    return path;
}

double traced_capacity(const Driver& driver, double T, int n) {
    std::vector<double> ts, lam;
    const auto maps = build_maps(driver, T, n, ts, lam);
    auto probe = [&](double R) {
        cplx u(0.0, R);
        for (int j = n; j >= 1; --j) u = apply_slit(maps[j - 1], u);
        const cplx w(0.0, R);
        // F(w) = w + lam(T) - lam(0) + (-2T)/w + O(1/w^2) in centered coords.
        const cplx rem = u - w - (lam[n] - lam[0]);
        return -(rem * w).real();
    };
    double scale = std::max(1.0, 4.0 * std::sqrt(T));
    const double e1 = probe(100.0 * scale);
    const double e2 = probe(200.0 * scale);
    return 2.0 * e2 - e1;
}

}  // namespace loewner
