#pragma once

#include <complex>

#include "loewner/driver.hpp"
#include "loewner/numerics.hpp"

namespace loewner {

/// Parameters of the point-constrained minimizer through e^{i theta}.
struct WangParams {
    double theta;
    double tau;          // (1 - cos(2 theta)/2) / 6
    double terminal_xi;  // -(4/3) cos(theta)

    explicit WangParams(double theta);
};

/// Parameters of the welding-constrained minimizer for the pair x0 < 0 < y0.
struct EmwParams {
    double x0;
    double y0;
    double r;                // -x0 / y0
    double tau;              // (x0^2 - 4 x0 y0 + y0^2) / 24
    double terminal_lambda;  // -(2/3)(x0 + y0)

    EmwParams(double x0, double y0);
};

/// Upward driver of the Wang minimizer through e^{i theta}, on [0, tau].
/// theta = pi/2 degenerates to the zero driver; theta > pi/2 reflects.
Driver wang_xi(double theta);

/// Downward driver of the same curve; equals the reversal of wang_xi.
Driver wang_lambda_down(double theta);

/// Centered downward image z(t) = x(t) + i y(t) of e^{i theta}.
cplx wang_tip_image(double theta, double t);

/// Upward driver -(8/sqrt 3) sqrt(t) of the theta -> 0 limit curve, on [0, 1/12].
Driver gamma0_xi();

/// Downward driver of the EMW minimizer welding x0 to y0, on [0, tau].
Driver emw_lambda(double x0, double y0);

/// Downward driver of the universal EMW curve, on [0, pi/6].
Driver universal_gamma_lambda();

/// Capacity time at which the universal curve truncates to welding ratio r.
double universal_truncation_time(double r);

/// Driver value at that truncation time: -(4 sqrt(pi)/3) ((1-r)/(1+r))^(3/2).
double universal_truncation_driver_value(double r);

/// Downward driver (3/2)(1 - sqrt(1 - 8t)) of the orthogonal circular arc
/// from 0 toward x = 1, on [0, 1/8].
Driver circular_arc_driver();

/// Capacity time at which the arc tip reaches argument theta.
double arc_time_for_angle(double theta);

/// Capacity time at which the arc welding ratio y/(y-x) reaches alpha.
double arc_time_for_ratio(double alpha);

/// Welded base endpoints (x_t, y_t) of the arc truncated at time t.
std::pair<double, double> arc_weld_endpoints(double t);

/// Centered welding of the arc truncation: maps [x_t, 0] onto [0, y_t].
double arc_weld(double t, double x);

/// The arc scaled to run from 0 toward 2 sqrt(2): driver 3 sqrt(2)(1 - sqrt(1-t)).
Driver arc22_driver();

/// Mapped-down images of the two base prime ends of that arc at time t.
std::pair<double, double> arc22_base_images(double t);

/// Driver c sqrt(t); generates a straight slit of angle pi * sqrt_alpha(c).
Driver sqrt_driver(double c, double horizon = 1.0);

/// Slit angle fraction alpha solving c = 2(1 - 2 alpha) / sqrt(alpha(1-alpha)).
double sqrt_alpha(double c);
double sqrt_c(double alpha);

/// Welded base endpoints of the slit at time t: x_t < 0 < y_t.
std::pair<double, double> sqrt_weld_endpoints(double alpha, double t);

}  // namespace loewner
