#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "loewner/driver.hpp"
#include "loewner/numerics.hpp"

namespace loewner {

/// Result of flowing a single point. When the trajectory collides with the
/// driver the point is marked not-alive and swallow_time holds the collision
/// time (midpoint of the final bracketing interval).
struct FlowPoint {
    cplx position;
    bool alive = true;
    std::optional<double> swallow_time;
};

/// Capacity-parametrized curve samples in the closed upper half-plane.
struct CurveTrace {
    std::vector<double> times;
    std::vector<cplx> points;
};

/// Integrate the downward flow dz/dt = 2 / (z - lambda(t)) from z0 to time t1.
FlowPoint evolve_point_down(const Driver& driver, cplx z0, double t1, int steps);

/// Integrate the upward flow dz/dt = -2 / (z - xi(t)) from z0 to time t1.
/// Real starting points stay real until they collide with the driver.
FlowPoint evolve_point_up(const Driver& driver, cplx z0, double t1, int steps);

/// First time the upward flow of the real point x0 meets the driver, or
/// nullopt when there is no collision before the horizon.
std::optional<double> hitting_time(const Driver& driver, double x0,
                                   int steps = 4096);

/// Trace the curve generated by the downward driver by composing tilted-slit
/// elementary maps fitted to the driver increments. `n` is the number of
/// capacity steps; `samples` the number of emitted curve points (0 means
/// min(n, 2000); the full grid is emitted when n <= 2000).
CurveTrace trace_curve(const Driver& driver, double T, int n, int samples = 0);

/// Curve tip gamma(T) via the upward flow of the reversed driver, integrated
/// in the variable sigma = sqrt(t) to absorb the square-root start. High
/// accuracy for smooth drivers; used as an independent route to the tip.
cplx tip_point(const Driver& driver, double T, int sigma_steps = 4000);

/// Half-plane capacity of the traced hull extracted from the 1/z coefficient
/// of the composed map (Richardson-extrapolated over two probe radii).
/// Equals 2T up to discretization error.
double traced_capacity(const Driver& driver, double T, int n);

/// Sampled trajectory of a real point under the up or down flow.
struct RealPath {
    std::vector<double> times;
    std::vector<double> values;
    bool collided = false;
    double collision_time = 0.0;
};

RealPath flow_real_path(const Driver& driver, double x0, bool down, double T,
                        int n);

/// Sampled trajectory of a point of the closed upper half-plane.
struct ComplexPath {
    std::vector<double> times;
    std::vector<cplx> values;
    bool collided = false;
    double collision_time = 0.0;
};

ComplexPath flow_complex_path(const Driver& driver, cplx z0, bool down,
                              double T, int n);

}  // namespace loewner
