#pragma once

#include <stdexcept>

#include "smcland/target.hpp"

namespace smcland {

// Relative engagement state plus inertial poses of both vehicles.
// R_z = z_t - z_p, so a UAV above the ground target has negative R_z.
struct EngagementState {
    double R_xy = 0.0;     // horizontal range [m]
    double R_z = 0.0;      // vertical range [m]
    double psi = 0.0;      // azimuth LOS angle [rad], (-pi, pi]
    double V_p = 0.0;      // UAV speed [m/s]
    double alpha_p = 0.0;  // UAV heading [rad]
    double gamma = 0.0;    // UAV flight path angle [rad], [-pi/2, pi/2]
    double V_t = 0.0;      // target speed [m/s]
    double alpha_t = 0.0;  // target heading [rad]
    double t = 0.0;        // time [s]

    double x_p = 0.0, y_p = 0.0, z_p = 0.0;  // UAV inertial position [m]
    double x_t = 0.0, y_t = 0.0;             // target inertial position [m]
};

struct RateVector {
    double dR_xy = 0.0;     // [m/s]
    double dR_z = 0.0;      // [m/s]
    double dpsi = 0.0;      // [rad/s]
    double dV_t = 0.0;      // [m/s^2]
    double dalpha_t = 0.0;  // [rad/s]
};

struct DerivedGeometry {
    double R = 0.0;       // slant range [m]
    double theta = 0.0;   // elevation LOS angle [rad]
    double dR = 0.0;      // [m/s]
    double dtheta = 0.0;  // [rad/s]
};

struct GuidanceCommand;

struct degenerate_geometry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct integration_diverged_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Relative kinematic rates. Target rates are taken from the target command.
// Throws degenerate_geometry_error when R_xy == 0 (dpsi undefined).
RateVector relative_rates(const EngagementState& state, const TargetCommand& tgt);

// Slant range, elevation LOS angle and their rates.
DerivedGeometry derived_geometry(const EngagementState& state, const RateVector& rates);

// V_t sin(alpha_t - psi) - V_p cos(gamma) sin(alpha_p - psi); zero on collision course.
double collision_course_residual(const EngagementState& state);

// Advances the full state (relative variables and inertial poses together) by one
// classical RK4 step with the guidance command held constant. Target rates are
// evaluated from the profile at the substep times. gamma is clamped to
// [-pi/2, pi/2], V_p floored at 0, and angles wrapped after the step.
EngagementState step(const EngagementState& state, const GuidanceCommand& cmd,
                     const TargetProfile& target, double dt);

// Builds a state whose relative variables are consistent with the given poses.
EngagementState make_state(double x_p, double y_p, double z_p, double x_t, double y_t,
                           double V_p, double alpha_p, double gamma, double V_t,
                           double alpha_t, double t = 0.0);

}  // namespace smcland
