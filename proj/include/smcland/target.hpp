#pragma once

#include <deque>
#include <stdexcept>
#include <string>

namespace smcland {

enum class TargetKind {
    Stationary,
    ConstantVelocity,
    ConstantTurn,
    SinusoidalTurn,
    ThrustManeuver,  // piecewise-constant (a_t, delta)
};

struct TargetProfile {
    TargetKind kind = TargetKind::Stationary;
    double V_t0 = 0.0;      // [m/s]
    double alpha_t0 = 0.0;  // [rad]

    double turn_rate = 0.0;       // [rad/s], ConstantTurn
    double turn_amplitude = 0.0;  // [rad/s], SinusoidalTurn
    double turn_frequency = 0.0;  // [rad/s], SinusoidalTurn

    double thrust_accel = 0.0;  // [m/s^2], ThrustManeuver
    double thrust_delta = 0.0;  // [rad], ThrustManeuver
};

struct TargetCommand {
    double dV_t = 0.0;      // [m/s^2]
    double dalpha_t = 0.0;  // [rad/s]
    double ddalpha_t = 0.0; // [rad/s^2]
    double a_t = 0.0;       // [m/s^2]
    double delta = 0.0;     // [rad]
};

struct insufficient_history_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluates the target maneuver at time t, including the exact analytic
// angular acceleration ddalpha_t for the profile.
TargetCommand target_command(const TargetProfile& profile, double t);

std::string to_string(TargetKind kind);
TargetKind target_kind_from_string(const std::string& s);

// Backward first difference of the two most recent heading-rate samples.
class TurnAccelEstimator {
public:
    void push(double t, double dalpha_t);
    // Throws insufficient_history_error with fewer than 2 distinct-time samples.
    double estimate() const;
    bool ready() const;

private:
    std::deque<std::pair<double, double>> history_;
};

}  // namespace smcland
