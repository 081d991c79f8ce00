#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loewner/driver.hpp"
#include "loewner/numerics.hpp"

namespace loewner {

/// Matched boundary pairs of a conformal welding: phi(x) = y, both sides
/// hitting the driver at the common time tau under the upward flow.
struct WeldingPair {
    double x;
    double y;
    double tau;
    bool ok = true;
};

struct WeldingMap {
    std::vector<WeldingPair> pairs;  // sorted by increasing x
    double x_outer = 0.0;            // endpoints welded exactly at time T
    double y_outer = 0.0;
    int failed_pairs = 0;
};

/// Numeric welding of the curve grown by the upward driver on [0, T]:
/// pairs x < 0 with y > 0 by equal hitting time, located by bisection.
WeldingMap weld_from_driver(const Driver& xi, double T, int n_pairs);

/// The real point u < 0 (resp. v > 0) whose upward-flow hitting time is tau.
double welded_left_at_time(const Driver& xi, double tau);
double welded_right_at_time(const Driver& xi, double tau);
std::pair<double, double> welded_pair_at_time(const Driver& xi, double tau);

/// Closed-form welding of the Wang minimizer: -x / sqrt(1 + pi b x^2) with
/// b = cos(theta) / sin^3(theta), mapping [x_theta, 0] onto [0, y_theta].
double wang_weld(double theta, double x);
std::pair<double, double> wang_weld_endpoints(double theta);

/// Welding of the EMW minimizer from its implicit equation
/// W(r, T o phi o T^{-1}(x)) = W(r, x), solved by safeguarded bisection.
double emw_weld_solve(double x0, double y0, double x);

/// W(r, u) = r u + 1/u + (1 - r) log|u| on the negative axis.
double emw_weld_W(double r, double u);

/// Ratio r(t) = -x(t)/y(t) of the centered upward flow of (x0, y0).
struct RatioTrajectory {
    std::vector<double> times;
    std::vector<double> ratios;
    bool collided = false;
    double collision_time = 0.0;
};
RatioTrajectory ratio_trajectory(const Driver& xi, double x0, double y0,
                                 int n = 400);

/// Fit of the welded endpoints against their small-time expansion
///   x(d) = -2 sqrt(d) + (2/3) xi'(0) d - (1/18) xi'(0)^2 d^(3/2) + ...
/// and the mirrored y(d). Slopes are log-log orders of the residuals.
struct WeldingExpansionReport {
    std::vector<double> deltas;
    std::vector<double> residual_x;
    std::vector<double> residual_y;
    double slope_x = 0.0;
    double slope_y = 0.0;
};
WeldingExpansionReport infinitesimal_welding_check(const Driver& xi,
                                                   const std::vector<double>& deltas);

/// CSV rows `x,y,tau` for a welding map.
std::string welding_csv(const WeldingMap& map);

}  // namespace loewner
