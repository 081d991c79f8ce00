#pragma once

#include <vector>

#include "loewner/driver.hpp"
#include "loewner/flow.hpp"

namespace loewner {

/// A parameter sweep of energy ratios with a Richardson-extrapolated limit.
struct RatioSweep {
    std::vector<double> param;
    std::vector<double> num;
    std::vector<double> den;
    std::vector<double> ratio;
    double extrapolated = 0.0;
};

/// Ratio of the energy spent by the driver on [0, delta] to the minimal
/// energy reaching the same tip; tends to 9/8 when lam'(0) != 0.
RatioSweep local_ratio_curve(const Driver& lam,
                             const std::vector<double>& deltas);

/// Same with the welding constraint: energy on [0, delta] against the
/// minimal energy welding the same endpoint pair; tends to 9/8.
RatioSweep local_ratio_weld(const Driver& xi, const std::vector<double>& deltas);

/// The orthogonal circular arc spends exactly 9/8 of the minimal energy.
struct ArcRatioRow {
    double theta;
    double arc_energy;        // quadrature over [0, t(theta)]
    double arc_closed_form;   // -9 log sin(theta)
    double ratio_to_minimal;  // should be 1.125
};
std::vector<ArcRatioRow> arc_exact_ratios(const std::vector<double>& thetas);

/// Tip argument 2*beta relation of the universal welding curve, and its
/// numeric inverse r(beta) (bisection; aborts on a monotonicity failure).
double beta_of_r(double r);
double r_of_beta(double beta);

/// Asymptotic energy comparisons between the two families near theta = pi/2:
/// welding-side ratio -> (pi/4)^2, tip-side ratio -> (4/pi)^2.
struct AsymptoticTables {
    RatioSweep welding_side;
    RatioSweep tip_side;
};
AsymptoticTables asymptotic_ratio_tables(const std::vector<double>& thetas);

/// Paired traces of the two minimizers welding the same endpoints
/// (x_theta, y_theta), with their discrete sup distance and driver gap.
struct SameWeldResult {
    CurveTrace point_minimizer;
    CurveTrace welding_minimizer;
    double curve_distance = 0.0;
    double driver_gap = 0.0;
    double point_tip_arg = 0.0;
    double welding_tip_arg = 0.0;
};
SameWeldResult same_weld_distinct_curves(double theta, int n = 4000,
                                         int samples = 400);

}  // namespace loewner
