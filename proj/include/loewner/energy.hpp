#pragma once

#include <string>
#include <vector>

#include "loewner/driver.hpp"

namespace loewner {

enum class EnergyMethod { partition, quadrature, analytic };

struct EnergyReport {
    double value = 0.0;
    EnergyMethod method = EnergyMethod::partition;
    int n = 0;
    double error_estimate = 0.0;
    bool fallback_warning = false;
    std::string grid;

    std::string to_json() const;
};

/// Partition sum  sum (d lambda)^2 / (2 dt) over the given partition of [0, T].
/// Monotone nondecreasing under refinement; sums beyond 1e6 report +inf.
EnergyReport energy_partition(const Driver& d, double T,
                              const std::vector<double>& partition);
EnergyReport energy_partition(const Driver& d, double T, int n);

/// (1/2) integral of slope^2 over [a, b] (defaults to [0, T]) by composite
/// Gauss-Legendre, substituting u = sqrt(t - a) or sqrt(b - t) on boundary
/// panels when the driver carries square-root endpoint structure. Falls back
/// to a refined partition (with a warning flag) when no slope is available.
EnergyReport energy_quadrature(const Driver& d, double T, int panels = 64);
EnergyReport energy_quadrature_range(const Driver& d, double a, double b,
                                     int panels = 64);

/// Minimal energy through e^{i theta}: -8 log(sin(theta)).
double wang_energy(double theta);

/// Minimal energy welding ratio r: -8 log(2 sqrt(r) / (1 + r)).
double emw_energy(double r);

/// Energy of the initial segment [0, t] of the Wang minimizer:
/// -4 log(sin^2 t + (cos^2/sin^4) y(t)^4).
double wang_partial_energy(double theta, double t);

}  // namespace loewner
