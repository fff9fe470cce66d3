#include "smcland/target.hpp"

#include <cmath>

namespace smcland {

TargetCommand target_command(const TargetProfile& p, double t) {
    TargetCommand c;
    switch (p.kind) {
        case TargetKind::Stationary:
        case TargetKind::ConstantVelocity:
            break;
        case TargetKind::ConstantTurn:
            c.dalpha_t = p.turn_rate;
            break;
        case TargetKind::SinusoidalTurn:
            c.dalpha_t = p.turn_amplitude * std::sin(p.turn_frequency * t);
            c.ddalpha_t = p.turn_amplitude * p.turn_frequency * std::cos(p.turn_frequency * t);
            break;
        case TargetKind::ThrustManeuver:
            c.dV_t = p.thrust_accel * std::cos(p.thrust_delta);
            c.dalpha_t = p.thrust_accel * std::sin(p.thrust_delta);
            break;
    }
    // (a_t, delta) reconstruction: a_t cos(delta) = dV_t, a_t sin(delta) = dalpha_t.
    c.a_t = std::hypot(c.dV_t, c.dalpha_t);
    c.delta = (c.a_t > 0.0) ? std::atan2(c.dalpha_t, c.dV_t) : 0.0;
    return c;
}

std::string to_string(TargetKind kind) {
    switch (kind) {
        case TargetKind::Stationary: return "stationary";
        case TargetKind::ConstantVelocity: return "constant_velocity";
        case TargetKind::ConstantTurn: return "constant_turn";
        case TargetKind::SinusoidalTurn: return "sinusoidal_turn";
        case TargetKind::ThrustManeuver: return "thrust_maneuver";
    }
    return "unknown";
}

TargetKind target_kind_from_string(const std::string& s) {
    if (s == "stationary") return TargetKind::Stationary;
    if (s == "constant_velocity") return TargetKind::ConstantVelocity;
    if (s == "constant_turn") return TargetKind::ConstantTurn;
    if (s == "sinusoidal_turn") return TargetKind::SinusoidalTurn;
    if (s == "thrust_maneuver") return TargetKind::ThrustManeuver;
    throw std::invalid_argument("unknown target kind: " + s);
}

void TurnAccelEstimator::push(double t, double dalpha_t) {
    history_.emplace_back(t, dalpha_t);
    while (history_.size() > 8) {
        history_.pop_front();
    }
}

bool TurnAccelEstimator::ready() const {
    return history_.size() >= 2 &&
           history_[history_.size() - 1].first != history_[history_.size() - 2].first;
}

double TurnAccelEstimator::estimate() const {
    if (!ready()) {
        throw insufficient_history_error("TurnAccelEstimator: need 2 distinct-time samples");
    }
    const auto& [t1, w1] = history_[history_.size() - 2];
    const auto& [t2, w2] = history_[history_.size() - 1];
    return (w2 - w1) / (t2 - t1);
}

}  // namespace smcland
