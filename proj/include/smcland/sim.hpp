#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smcland/engagement.hpp"
#include "smcland/phase.hpp"
#include "smcland/target.hpp"
#include "smcland/tuning.hpp"

namespace smcland {

struct ScenarioConfig {
    std::string name;

    // Initial conditions.
    double R_xy0 = 0.0;
    double R_z0 = 0.0;
    double psi0 = 0.0;
    double V_p0 = 0.0;
    double alpha_p0 = 0.0;
    double gamma0 = 0.0;

    TargetProfile target;
    PhaseConfig phases;
    RetunePolicy retune;
    // Gain set for the single-phase leg of compare_phases; when absent the
    // phase-1 gains are reused with Phase-2 semantics.
    std::optional<GuidanceParams> single_phase_params;

    double dt = 1e-3;           // [s]
    double t_max = 600.0;       // [s]
    double R_xy_td = 0.3;       // touchdown threshold [m]
    double R_z_td = 0.3;        // touchdown threshold [m]
    int guidance_divisor = 1;   // guidance update every N integrator steps
    bool finite_diff_ddalpha = false;
    bool skip_validation = false;
};

struct LogRecord {
    double t;
    double x_p, y_p, z_p, x_t, y_t;
    double R_xy, R_z, R, psi, theta;
    double V_p, alpha_p, gamma, V_t, alpha_t;
    double S1, S2, S3;
    double dVp_raw, dalphap_raw, dgamma_raw;
    double dVp_cmd, dalphap_cmd, dgamma_cmd;
    int phase;
    int stage;
};

struct TrajectoryLog {
    std::vector<LogRecord> records;
};

enum class RunOutcome { Touchdown, Timeout, Diverged };

struct SummaryMetrics {
    RunOutcome outcome = RunOutcome::Timeout;
    double touchdown_time = 0.0;       // [s]
    double terminal_dR_xy = 0.0;       // |dR_xy| at end [m/s]
    double terminal_dR_z = 0.0;        // [m/s]
    double terminal_azimuth_err = 0.0; // wrapped |psi - alpha_t - zeta_des| [rad]
    double terminal_theta_err = 0.0;   // |theta - theta_des| [rad]
    double terminal_speed_err = 0.0;   // |V_p - V_t| [m/s]
    double terminal_V_p = 0.0;         // [m/s]
    double terminal_heading_err = 0.0; // wrapped |alpha_p - alpha_t| [rad]
    double terminal_gamma = 0.0;       // |gamma| [rad]
    double peak_V_p = 0.0;             // [m/s]
    double peak_dR_xy = 0.0;           // max |dR_xy| over the run [m/s]
    double peak_dV_p = 0.0;            // [m/s^2], post-clamp
    double peak_dalpha_p = 0.0;        // [rad/s]
    double peak_dgamma = 0.0;          // [rad/s]
    double reach_time_S1 = -1.0;       // first |S1| <= 1e-6 crossing, -1 if none
    double reach_time_S2 = -1.0;
    double reach_time_S3 = -1.0;
};

struct PhaseComparison {
    SummaryMetrics single_phase;
    SummaryMetrics two_phase;
    double delta_peak_dV_p = 0.0;      // two_phase - single_phase
    double delta_peak_dalpha_p = 0.0;
    double delta_peak_dgamma = 0.0;
    double delta_touchdown_time = 0.0;
};

struct RunResult {
    TrajectoryLog log;
    SummaryMetrics metrics;
};

EngagementState initial_state(const ScenarioConfig& cfg);

bool touchdown_check(const EngagementState& state, const ScenarioConfig& cfg);

// Closed-loop run: target command -> phase/stage selection -> sliding vector
// -> assemble/solve/clamp -> RK4 step, until touchdown or t_max.
RunResult run_scenario(const ScenarioConfig& cfg);

// Runs the scenario in SinglePhase and TwoPhase modes and pairs the metrics.
PhaseComparison compare_phases(const ScenarioConfig& cfg);

}  // namespace smcland
