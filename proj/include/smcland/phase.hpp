#pragma once

#include "smcland/guidance.hpp"

namespace smcland {

enum class PhaseMode { SinglePhase, TwoPhase };

struct PhaseConfig {
    PhaseMode mode = PhaseMode::SinglePhase;
    double R_switch = 0.0;  // [m], TwoPhase only
    GuidanceParams phase1_params;
    GuidanceParams phase2_params;  // also the SinglePhase set
};

struct StageState {
    int stage_index = 0;
    double R_xy_stage_start = 0.0;  // [m]
    GuidanceParams current_params;
};

struct RetunePolicy {
    bool enabled = false;
    double k_a_numerator = 1.5;  // k_a = numerator / R_xy at stage start
    double k_b_ratio = 3.0;      // k_b = ratio * k_a
    double k_c_ratio = 2.0;
};

// Phase1 iff TwoPhase mode and R_xy > R_switch; SinglePhase always behaves
// as Phase2 (full target-relative sliding variables).
Phase active_phase(double R_xy, const PhaseConfig& cfg);

const GuidanceParams& phase_params(Phase phase, const PhaseConfig& cfg);

// Gain generating rules evaluated at a state: k_a from the range, k_b, k_c as
// fixed ratios, k1 from the sufficiency rule, k2, k3 from the
// equal-reach-time ratio rule. Non-gain fields of base are preserved.
GuidanceParams retune_gains(double R_xy, const EngagementState& state, const RateVector& rates,
                            const GuidanceParams& base, Phase phase, const RetunePolicy& retune);

// Re-tunes the gains when R_xy halves from the stage start or grows 5 m above it.
StageState stage_update(double R_xy, const EngagementState& state, const RateVector& rates,
                        const StageState& stage, Phase phase, const RetunePolicy& retune);

}  // namespace smcland
