#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>

#include "smcland/engagement.hpp"
#include "smcland/target.hpp"

namespace smcland {

enum class Phase : int { Phase1 = 1, Phase2 = 2 };

struct GuidanceParams {
    double k_a = 0.0;  // [1/s]
    double k_b = 0.0;  // [1/s]
    double k_c = 0.0;  // [1/s]
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    int m = 5;  // odd, coprime with n, n < m
    int n = 3;

    double zeta_des = 0.0;   // desired psi - alpha_t [rad]
    double theta_des = 0.0;  // desired elevation LOS angle [rad]
    double xi = 0.0;         // Phase-1 fixed desired azimuth [rad]

    double M1 = 0.0;  // speed floor [m/s]
    double M2 = 0.0;  // cos(gamma) floor
    double N1 = 0.0;  // |dV_p| bound [m/s^2]
    double N2 = 0.0;  // |dalpha_p| bound [rad/s]
    double N3 = 0.0;  // |dgamma| bound [rad/s]
};

struct SlidingVector {
    double S1 = 0.0;  // [m/s]
    double S2 = 0.0;  // [m/s]
    double S3 = 0.0;  // [rad/s]
};

// Algorithm-1 clamp rules that may fire on a command.
enum ClampFlag : std::uint8_t {
    kClampNone = 0,
    kClampSpeedFloor = 1 << 0,  // V_p < M1 and dV_p' < 0
    kClampGammaHold = 1 << 1,   // cos(gamma) < M2 and dgamma'*gamma > 0
    kClampSatVp = 1 << 2,
    kClampSatAlphap = 1 << 3,
    kClampSatGamma = 1 << 4,
};

struct GuidanceCommand {
    double dV_p = 0.0;      // [m/s^2]
    double dalpha_p = 0.0;  // [rad/s]
    double dgamma = 0.0;    // [rad/s]
    std::uint8_t clamped_flags = kClampNone;
};

struct singularity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Real odd-root value of s^{n/m}: sign(s)*|s|^{n/m}.
double signed_frac_pow(double s, int n, int m);

// Sliding variables. Phase 2 uses the target-relative azimuth error
// (psi - alpha_t - zeta_des); Phase 1 tracks the fixed azimuth xi.
// Angular errors are wrapped to (-pi, pi].
SlidingVector sliding_vector(const EngagementState& state, const RateVector& rates,
                             const GuidanceParams& params, Phase phase);

// A = L * A_p with L unit lower triangular; det(A) = V_p^2 cos(gamma).
Eigen::Matrix3d assemble_A(const EngagementState& state, double theta_des);

// Right-hand side of A U = B enforcing dS_i/dt = -k_i S_i^{n/m}.
// In Phase 1 the third row drops the dalpha_t/ddalpha_t terms that stem
// from the Phase-2 S3 definition; kinematic target terms remain.
Eigen::Vector3d assemble_B(const EngagementState& state, const RateVector& rates,
                           const TargetCommand& tgt, const GuidanceParams& params,
                           Phase phase, const SlidingVector& S);

// Solves A U = B. Throws singularity_error when |det(A)| <= eps_det.
GuidanceCommand raw_command(const Eigen::Matrix3d& A, const Eigen::Vector3d& B,
                            double eps_det = 1e-6);

// Same command through the hand-expanded closed form U = A_p^{-1} L^{-1} B,
// kept as an algebraically independent route for cross-checking.
GuidanceCommand expanded_command(const EngagementState& state, const Eigen::Vector3d& B,
                                 double theta_des, double eps_det = 1e-6);

// Algorithm-1 clamping: speed floor, flight-path-angle hold near +-pi/2,
// then symmetric saturation to [-N_i, +N_i].
GuidanceCommand clamp_command(const GuidanceCommand& raw, const EngagementState& state,
                              const GuidanceParams& params);

}  // namespace smcland
