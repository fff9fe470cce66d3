#include "smcland/phase.hpp"

#include "smcland/tuning.hpp"

namespace smcland {

Phase active_phase(double R_xy, const PhaseConfig& cfg) {
    if (cfg.mode == PhaseMode::TwoPhase && R_xy > cfg.R_switch) {
        return Phase::Phase1;
    }
    return Phase::Phase2;
}

const GuidanceParams& phase_params(Phase phase, const PhaseConfig& cfg) {
    if (cfg.mode == PhaseMode::TwoPhase && phase == Phase::Phase1) {
        return cfg.phase1_params;
    }
    return cfg.phase2_params;
}

GuidanceParams retune_gains(double R_xy, const EngagementState& state, const RateVector& rates,
                            const GuidanceParams& base, Phase phase, const RetunePolicy& retune) {
    GuidanceParams p = base;
    p.k_a = retune.k_a_numerator / R_xy;
    p.k_b = retune.k_b_ratio * p.k_a;
    p.k_c = retune.k_c_ratio * p.k_a;

    const SlidingVector S = sliding_vector(state, rates, p, phase);
    if (S.S1 != 0.0) {
        p.k1 = k1_sufficient(S.S1, R_xy, rates.dR_xy, p.k_a, p.m, p.n);
        auto [k2, k3] = ratio_gains(p.k1, S.S1, S.S2, S.S3, p.m, p.n);
        p.k2 = k2;
        p.k3 = k3;
    }
    return p;
}

StageState stage_update(double R_xy, const EngagementState& state, const RateVector& rates,
                        const StageState& stage, Phase phase, const RetunePolicy& retune) {
    if (!retune.enabled) {
        return stage;
    }
    const bool halved = R_xy <= 0.5 * stage.R_xy_stage_start;
    const bool receded = R_xy >= stage.R_xy_stage_start + 5.0;
    if (!halved && !receded) {
        return stage;
    }

    StageState next;
    next.stage_index = stage.stage_index + 1;
    next.R_xy_stage_start = R_xy;
    next.current_params = retune_gains(R_xy, state, rates, stage.current_params, phase, retune);
    return next;
}

}  // namespace smcland
