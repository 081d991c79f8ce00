#pragma once

#include <utility>
#include <vector>

#include "loewner/driver.hpp"
#include "loewner/flow.hpp"
#include "loewner/numerics.hpp"

namespace loewner {

/// Integrated solution of the point-constrained family's ODE system
///   lam' = 8x/(x^2+y^2), x' = -6x/(x^2+y^2), y' = -2y/(x^2+y^2)
/// started from (0, cos theta, sin theta).
struct WangOde {
    std::vector<double> times;
    std::vector<double> lambda;
    std::vector<double> x;
    std::vector<double> y;
};
WangOde wang_ode_solve(double theta, int n, double t_end = -1.0);

/// Integrated solution of the welding family's upward system
///   xi' = -4/x - 4/y, x' = 2/x + 4/y, y' = 4/x + 2/y
/// started from (0, x0, y0).
struct EmwOde {
    std::vector<double> times;
    std::vector<double> xi;
    std::vector<double> x;
    std::vector<double> y;
};
EmwOde emw_ode_solve(double x0, double y0, int n, double t_end = -1.0);

/// Residual of the cubic variety (4 - 3x) y^2 - 3x(x - 1)^2 of the limit
/// curve; exact polynomial evaluation, no normalization.
double variety_residual_gamma0(cplx p);

/// R(z) = z^2 (z - 3) / (1 - 3z); real on the real axis and on the variety.
cplx rational_map_R(cplx z);

/// Residual of the quartic variety (x^2 + y^2)^2 + 4xy of the universal
/// welding curve.
double variety_residual_universal(cplx p);

/// Distance of p^2 from the circle of radius 1 centered at -i (the complex
/// square of the universal welding curve).
double universal_square_circle_residual(cplx p);

/// Matched-capacity-grid sup distance between the curve grown by the theta
/// driver up to t_alpha (translated, scaled by 1/r) and the alpha minimizer.
double wang_universality_check(double theta, double alpha, int n = 20000,
                               int samples = 800);

/// |measured base-endpoint ratio - r| after truncating the universal welding
/// curve at its closed-form truncation time.
double emw_universality_check(double r);

/// Sampled argument of the centered downward image of the curve tip; the
/// terminal angle tends to pi/2 for finite-energy drivers. Samples stop at
/// t = T (1 - 1e-4).
std::vector<std::pair<double, double>> even_angle_check(const Driver& lam,
                                                        double T, int grid);

}  // namespace loewner
