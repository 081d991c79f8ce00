#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loewner {

/// A real-valued driving function on [0, horizon].
///
/// `value` must be finite and continuous on the interval. `slope` carries the
/// closed-form derivative when one is known; it is left empty otherwise. The
/// endpoint flags describe square-root structure of the value (used by the
/// energy quadrature to substitute u = sqrt(t) on the boundary panels) and
/// one-sided derivative blow-up (slope_at reports "unbounded" there).
struct Driver {
    std::function<double(double)> value;
    std::function<double(double)> slope;
    double horizon = 0.0;
    std::string label;

    bool sqrt_start = false;
    bool sqrt_end = false;
    bool slope_unbounded_start = false;
    bool slope_unbounded_end = false;

    double operator()(double t) const { return value(t); }
    bool has_slope() const { return static_cast<bool>(slope); }

    /// Closed-form derivative at t, or nullopt when none is available or the
    /// one-sided limit at the requested endpoint is infinite.
    std::optional<double> slope_at(double t) const;
};

/// The zero driver on [0, horizon]; generates a vertical segment.
Driver zero_driver(double horizon);

/// Driver of the curve scaled by r: t -> r * value(t / r^2) on [0, r^2 T].
Driver scale_driver(const Driver& d, double r);

/// Reversal shifted to start at zero: t -> value(T - t) - value(T).
Driver reverse_driver(const Driver& d, double T);
Driver reverse_driver(const Driver& d);

/// Same driver with the horizon shortened to T <= horizon.
Driver restrict_driver(const Driver& d, double T);

/// Uniform samples (t_k, value(t_k)), k = 0..n, on [0, T].
std::vector<std::pair<double, double>> sample_driver(const Driver& d, double T,
                                                     int n);

}  // namespace loewner
