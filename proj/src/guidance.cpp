#include "smcland/guidance.hpp"

#include <cmath>

#include "smcland/angles.hpp"

namespace smcland {

double signed_frac_pow(double s, int n, int m) {
    if (s == 0.0) {
        return 0.0;
    }
    return std::copysign(std::pow(std::abs(s), static_cast<double>(n) / m), s);
}

SlidingVector sliding_vector(const EngagementState& s, const RateVector& r,
                             const GuidanceParams& p, Phase phase) {
    SlidingVector S;
    const double tan_td = std::tan(p.theta_des);
    S.S1 = r.dR_xy + p.k_a * s.R_xy;
    S.S2 = r.dR_z + tan_td * r.dR_xy + p.k_b * (s.R_z + tan_td * s.R_xy);
    if (phase == Phase::Phase1) {
        S.S3 = r.dpsi + p.k_c * wrap_pi(s.psi - p.xi);
    } else {
        S.S3 = (r.dpsi - r.dalpha_t) + p.k_c * wrap_pi(s.psi - s.alpha_t - p.zeta_des);
    }
    return S;
}

Eigen::Matrix3d assemble_A(const EngagementState& s, double theta_des) {
    const double d = s.alpha_p - s.psi;
    const double cd = std::cos(d), sd = std::sin(d);
    const double cg = std::cos(s.gamma), sg = std::sin(s.gamma);
    const double V = s.V_p;

    Eigen::Matrix3d L;
    L << 1.0, 0.0, 0.0,
         std::tan(theta_des), 1.0, 0.0,
         0.0, 0.0, 1.0;

    Eigen::Matrix3d Ap;
    Ap << -cd * cg,  V * sd * cg,  V * cd * sg,
          -sg,       0.0,         -V * cg,
          -sd * cg, -V * cd * cg,  V * sd * sg;

    return L * Ap;
}

Eigen::Vector3d assemble_B(const EngagementState& s, const RateVector& r,
                           const TargetCommand& tgt, const GuidanceParams& p,
                           Phase phase, const SlidingVector& S) {
    const double d = s.alpha_p - s.psi;
    const double e = s.alpha_t - s.psi;
    const double cd = std::cos(d), sd = std::sin(d);
    const double ce = std::cos(e), se = std::sin(e);
    const double cg = std::cos(s.gamma), sg = std::sin(s.gamma);
    const double tan_td = std::tan(p.theta_des);

    // Residual of d/dt(dR_xy) not carried by A*U.
    const double rxy_residual =
        s.V_p * sd * cg * r.dpsi - tgt.dV_t * ce + s.V_t * se * (r.dalpha_t - r.dpsi);

    Eigen::Vector3d B;
    B(0) = -p.k1 * signed_frac_pow(S.S1, p.n, p.m) + rxy_residual - p.k_a * r.dR_xy;
    B(1) = tan_td * (rxy_residual - p.k_b * r.dR_xy) -
           p.k2 * signed_frac_pow(S.S2, p.n, p.m) + p.k_b * s.V_p * sg;

    // Third row: R_xy-scaled azimuth channel. In Phase 1 the S3 definition has
    // no alpha_t dependence, so its k_c and angular-acceleration terms drop;
    // the kinematic ddpsi terms keep the true target rates.
    const double kc_term = (phase == Phase::Phase1)
                               ? -p.k_c * s.R_xy * r.dpsi
                               : -p.k_c * s.R_xy * (r.dpsi - r.dalpha_t);
    const double ddalpha_term = (phase == Phase::Phase1) ? 0.0 : tgt.ddalpha_t * s.R_xy;
    B(2) = -s.R_xy * p.k3 * signed_frac_pow(S.S3, p.n, p.m) + kc_term + ddalpha_term +
           r.dR_xy * r.dpsi - s.V_p * cd * cg * r.dpsi - s.V_t * ce * (r.dalpha_t - r.dpsi) -
           tgt.dV_t * se;
    return B;
}

GuidanceCommand raw_command(const Eigen::Matrix3d& A, const Eigen::Vector3d& B,
                            double eps_det) {
    const double det = A.determinant();
    if (std::abs(det) <= eps_det) {
        throw singularity_error("raw_command: |det(A)| <= eps_det");
    }
    const Eigen::Vector3d U = A.partialPivLu().solve(B);
    GuidanceCommand cmd;
    cmd.dV_p = U(0);
    cmd.dalpha_p = U(1);
    cmd.dgamma = U(2);
    return cmd;
}

GuidanceCommand expanded_command(const EngagementState& s, const Eigen::Vector3d& B,
                                 double theta_des, double eps_det) {
    const double cg = std::cos(s.gamma), sg = std::sin(s.gamma);
    const double V = s.V_p;
    if (std::abs(V * V * cg) <= eps_det) {
        throw singularity_error("expanded_command: |det(A)| <= eps_det");
    }
    const double d = s.alpha_p - s.psi;
    const double cd = std::cos(d), sd = std::sin(d);

    // U = Ap^{-1} L^{-1} B, both inverses in closed form.
    const double W1 = B(0);
    const double W2 = B(1) - std::tan(theta_des) * B(0);
    const double W3 = B(2);

    GuidanceCommand cmd;
    cmd.dV_p = -cg * cd * W1 - sg * W2 - cg * sd * W3;
    cmd.dalpha_p = (sd * W1 - cd * W3) / (V * cg);
    cmd.dgamma = (sg * cd * W1 - cg * W2 + sg * sd * W3) / V;
    return cmd;
}

GuidanceCommand clamp_command(const GuidanceCommand& raw, const EngagementState& s,
                              const GuidanceParams& p) {
    GuidanceCommand cmd = raw;
    cmd.clamped_flags = kClampNone;
    if (s.V_p < p.M1 && cmd.dV_p < 0.0) {
        cmd.dV_p = 0.0;
        cmd.clamped_flags |= kClampSpeedFloor;
    }
    if (std::cos(s.gamma) < p.M2 && cmd.dgamma * s.gamma > 0.0) {
        cmd.dgamma = 0.0;
        cmd.clamped_flags |= kClampGammaHold;
    }
    if (std::abs(cmd.dV_p) > p.N1) {
        cmd.dV_p = clamp_sym(cmd.dV_p, p.N1);
        cmd.clamped_flags |= kClampSatVp;
    }
    if (std::abs(cmd.dalpha_p) > p.N2) {
        cmd.dalpha_p = clamp_sym(cmd.dalpha_p, p.N2);
        cmd.clamped_flags |= kClampSatAlphap;
    }
    if (std::abs(cmd.dgamma) > p.N3) {
        cmd.dgamma = clamp_sym(cmd.dgamma, p.N3);
        cmd.clamped_flags |= kClampSatGamma;
    }
    return cmd;
}

}  // namespace smcland
