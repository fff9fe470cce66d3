#include "smcland/sim.hpp"

#include <cmath>

#include "smcland/angles.hpp"

namespace smcland {

EngagementState initial_state(const ScenarioConfig& cfg) {
    // Target starts at the origin; the UAV pose follows from (R_xy0, psi0, R_z0).
    EngagementState s;
    s.x_t = 0.0;
    s.y_t = 0.0;
    s.x_p = -cfg.R_xy0 * std::cos(cfg.psi0);
    s.y_p = -cfg.R_xy0 * std::sin(cfg.psi0);
    s.z_p = -cfg.R_z0;
    s.R_xy = cfg.R_xy0;
    s.R_z = cfg.R_z0;
    s.psi = wrap_pi(cfg.psi0);
    s.V_p = cfg.V_p0;
    s.alpha_p = wrap_pi(cfg.alpha_p0);
    s.gamma = cfg.gamma0;
    s.V_t = cfg.target.V_t0;
    s.alpha_t = wrap_pi(cfg.target.alpha_t0);
    s.t = 0.0;
    return s;
}

bool touchdown_check(const EngagementState& state, const ScenarioConfig& cfg) {
    return state.R_xy <= cfg.R_xy_td && std::abs(state.R_z) <= cfg.R_z_td;
}

namespace {

LogRecord make_record(const EngagementState& s, const DerivedGeometry& g,
                      const SlidingVector& S, const GuidanceCommand& raw,
                      const GuidanceCommand& cmd, Phase phase, int stage) {
    LogRecord rec;
    rec.t = s.t;
    rec.x_p = s.x_p; rec.y_p = s.y_p; rec.z_p = s.z_p;
    rec.x_t = s.x_t; rec.y_t = s.y_t;
    rec.R_xy = s.R_xy; rec.R_z = s.R_z; rec.R = g.R;
    rec.psi = s.psi; rec.theta = g.theta;
    rec.V_p = s.V_p; rec.alpha_p = s.alpha_p; rec.gamma = s.gamma;
    rec.V_t = s.V_t; rec.alpha_t = s.alpha_t;
    rec.S1 = S.S1; rec.S2 = S.S2; rec.S3 = S.S3;
    rec.dVp_raw = raw.dV_p; rec.dalphap_raw = raw.dalpha_p; rec.dgamma_raw = raw.dgamma;
    rec.dVp_cmd = cmd.dV_p; rec.dalphap_cmd = cmd.dalpha_p; rec.dgamma_cmd = cmd.dgamma;
    rec.phase = static_cast<int>(phase);
    rec.stage = stage;
    return rec;
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
    RunResult result;
    SummaryMetrics& m = result.metrics;

    EngagementState state = initial_state(cfg);
    TurnAccelEstimator estimator;

    Phase phase = active_phase(state.R_xy, cfg.phases);
    StageState stage;
    stage.stage_index = 0;
    stage.R_xy_stage_start = state.R_xy;
    stage.current_params = phase_params(phase, cfg.phases);

    GuidanceCommand raw, cmd;
    bool have_cmd = false;
    int step_count = 0;
    const long max_steps = static_cast<long>(std::ceil(cfg.t_max / cfg.dt));
    result.log.records.reserve(std::min<long>(max_steps + 1, 2'000'000));

    m.outcome = RunOutcome::Timeout;
    for (long i = 0; i < max_steps; ++i) {
        TargetCommand tc = target_command(cfg.target, state.t);
        RateVector rates;
        try {
            rates = relative_rates(state, tc);
        } catch (const degenerate_geometry_error&) {
            // Horizontal flyover: R_xy collapsed before the vertical channel
            // closed, so the azimuth rate is undefined.
            m.outcome = RunOutcome::Diverged;
            break;
        }
        const DerivedGeometry geom = derived_geometry(state, rates);

        const Phase new_phase = active_phase(state.R_xy, cfg.phases);
        if (new_phase != phase) {
            // Hard switch: the phase-2 parameter set replaces phase-1 atomically.
            phase = new_phase;
            stage.current_params = phase_params(phase, cfg.phases);
            stage.R_xy_stage_start = state.R_xy;
            if (cfg.retune.enabled) {
                stage.current_params = retune_gains(state.R_xy, state, rates,
                                                    stage.current_params, phase, cfg.retune);
            }
        }
        stage = stage_update(state.R_xy, state, rates, stage, phase, cfg.retune);
        const GuidanceParams& params = stage.current_params;

        const SlidingVector S = sliding_vector(state, rates, params, phase);

        if (step_count % cfg.guidance_divisor == 0) {
            if (cfg.finite_diff_ddalpha) {
                estimator.push(state.t, tc.dalpha_t);
                tc.ddalpha_t = estimator.ready() ? estimator.estimate() : 0.0;
            }
            try {
                const Eigen::Matrix3d A = assemble_A(state, params.theta_des);
                const Eigen::Vector3d B = assemble_B(state, rates, tc, params, phase, S);
                raw = raw_command(A, B);
                cmd = clamp_command(raw, state, params);
                have_cmd = true;
            } catch (const singularity_error&) {
                // Hold the previous command for one step; the M1/M2 clamps keep
                // det(A) away from zero afterwards.
                if (!have_cmd) {
                    raw = GuidanceCommand{};
                    cmd = clamp_command(raw, state, params);
                }
            }
        }
        ++step_count;

        result.log.records.push_back(make_record(state, geom, S, raw, cmd, phase, stage.stage_index));

        m.peak_V_p = std::max(m.peak_V_p, state.V_p);
        m.peak_dR_xy = std::max(m.peak_dR_xy, std::abs(rates.dR_xy));
        m.peak_dV_p = std::max(m.peak_dV_p, std::abs(cmd.dV_p));
        m.peak_dalpha_p = std::max(m.peak_dalpha_p, std::abs(cmd.dalpha_p));
        m.peak_dgamma = std::max(m.peak_dgamma, std::abs(cmd.dgamma));
        if (m.reach_time_S1 < 0.0 && std::abs(S.S1) <= 1e-6) m.reach_time_S1 = state.t;
        if (m.reach_time_S2 < 0.0 && std::abs(S.S2) <= 1e-6) m.reach_time_S2 = state.t;
        if (m.reach_time_S3 < 0.0 && std::abs(S.S3) <= 1e-6) m.reach_time_S3 = state.t;

        try {
            state = step(state, cmd, cfg.target, cfg.dt);
        } catch (const integration_diverged_error&) {
            m.outcome = RunOutcome::Diverged;
            break;
        }

        if (touchdown_check(state, cfg)) {
            m.outcome = RunOutcome::Touchdown;
            break;
        }
    }

    // Terminal record and metrics at the final state.
    m.touchdown_time = state.t;
    if (state.R_xy <= 0.0) {
        // Degenerate final geometry (flyover); the log ends at the last valid
        // sample and the terminal angle metrics are meaningless.
        return result;
    }
    const TargetCommand tc_end = target_command(cfg.target, state.t);
    const RateVector rates_end = relative_rates(state, tc_end);
    const DerivedGeometry geom_end = derived_geometry(state, rates_end);
    const GuidanceParams& params_end = stage.current_params;
    const SlidingVector S_end = sliding_vector(state, rates_end, params_end, phase);
    result.log.records.push_back(
        make_record(state, geom_end, S_end, raw, cmd, phase, stage.stage_index));

    m.touchdown_time = state.t;
    m.terminal_dR_xy = std::abs(rates_end.dR_xy);
    m.terminal_dR_z = std::abs(rates_end.dR_z);
    const GuidanceParams& terminal_ref = cfg.phases.phase2_params;
    m.terminal_azimuth_err = std::abs(wrap_pi(state.psi - state.alpha_t - terminal_ref.zeta_des));
    m.terminal_theta_err = std::abs(geom_end.theta - terminal_ref.theta_des);
    m.terminal_speed_err = std::abs(state.V_p - state.V_t);
    m.terminal_V_p = state.V_p;
    m.terminal_heading_err = std::abs(wrap_pi(state.alpha_p - state.alpha_t));
    m.terminal_gamma = std::abs(state.gamma);
    m.peak_V_p = std::max(m.peak_V_p, state.V_p);
    m.peak_dR_xy = std::max(m.peak_dR_xy, std::abs(rates_end.dR_xy));
    return result;
}

PhaseComparison compare_phases(const ScenarioConfig& cfg) {
    ScenarioConfig single = cfg;
    single.phases.mode = PhaseMode::SinglePhase;
    if (cfg.single_phase_params) {
        single.phases.phase2_params = *cfg.single_phase_params;
    } else if (cfg.phases.mode == PhaseMode::TwoPhase) {
        // No dedicated single-phase gain set: reuse the far-field gains with
        // Phase-2 sliding-variable semantics.
        GuidanceParams p = cfg.phases.phase1_params;
        p.zeta_des = cfg.phases.phase2_params.zeta_des;
        single.phases.phase2_params = p;
    }

    ScenarioConfig two = cfg;
    two.phases.mode = PhaseMode::TwoPhase;

    PhaseComparison c;
    c.single_phase = run_scenario(single).metrics;
    c.two_phase = run_scenario(two).metrics;
    c.delta_peak_dV_p = c.two_phase.peak_dV_p - c.single_phase.peak_dV_p;
    c.delta_peak_dalpha_p = c.two_phase.peak_dalpha_p - c.single_phase.peak_dalpha_p;
    c.delta_peak_dgamma = c.two_phase.peak_dgamma - c.single_phase.peak_dgamma;
    c.delta_touchdown_time = c.two_phase.touchdown_time - c.single_phase.touchdown_time;
    return c;
}

}  // namespace smcland
