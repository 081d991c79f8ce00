#pragma once

#include <string>
#include <vector>

#include "loewner/driver.hpp"
#include "loewner/numerics.hpp"

namespace loewner {

enum class FlowDirection { down, up };

/// Deterministic SLE_0(rho_1, ..., rho_n) configuration. The driver is
/// steered by the force points:
///   down: dlam = -sum rho_j Re(1/(U_j - lam)) dt,  dU_j = 2/(U_j - lam) dt
///   up:   dxi  = +sum rho_j Re(1/(V_j - xi)) dt,   dV_j = -2/(V_j - xi) dt
struct SleZeroConfig {
    FlowDirection direction = FlowDirection::down;
    std::vector<double> rho;
    double start_driver = 0.0;
    std::vector<cplx> start_force_points;
};

enum class StopReason { horizon, collision };

struct SleZeroTrajectory {
    FlowDirection direction = FlowDirection::down;
    std::vector<double> rho;
    std::vector<double> times;
    std::vector<double> driver;
    std::vector<std::vector<cplx>> force_points;  // one vector per force point
    StopReason stop_reason = StopReason::horizon;
    double stop_time = 0.0;

    std::string to_csv() const;  // t,xi,v1_re,v1_im,...
};

/// Integrate the coupled driver/force-point system up to the horizon or the
/// first driver-force collision, with geometric step refinement near it.
SleZeroTrajectory sle_integrate(const SleZeroConfig& config, double horizon,
                                int n);

/// Reversal xi_t = lam_{T-t} - lam_T, V_t = U_{T-t} - lam_T of a trajectory.
SleZeroTrajectory reverse_trajectory(const SleZeroTrajectory& traj);

struct ResidualReport {
    double sup_error = 0.0;
    double at_time = 0.0;
};

/// Downward SLE_0(-8) with force point e^{i theta} against the closed-form
/// downward Wang driver, compared on [0, 0.9 tau].
ResidualReport verify_wang_sle8(double theta, int n);

struct ArcSleReport {
    double identity_residual = 0.0;  // |lam' - 3/(g- - lam) - 3/(g+ - lam)|
    double sup_error = 0.0;          // integrated SLE_0(-3,-3) vs closed form
    double symmetric_driver_max = 0.0;  // upward symmetric start stays at 0
};

/// The orthogonal circular arc as SLE_0(-3,-3).
ArcSleReport verify_arc_sle33(int n);

}  // namespace loewner
