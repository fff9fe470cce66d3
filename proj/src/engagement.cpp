#include "smcland/engagement.hpp"

#include <array>
#include <cmath>

#include "smcland/angles.hpp"
#include "smcland/guidance.hpp"

namespace smcland {

RateVector relative_rates(const EngagementState& s, const TargetCommand& tgt) {
    if (s.R_xy <= 0.0) {
        throw degenerate_geometry_error("relative_rates: R_xy = 0, dpsi undefined");
    }
    RateVector r;
    const double cg = std::cos(s.gamma);
    r.dR_xy = s.V_t * std::cos(s.alpha_t - s.psi) - s.V_p * cg * std::cos(s.alpha_p - s.psi);
    r.dR_z = -s.V_p * std::sin(s.gamma);
    r.dpsi = (s.V_t * std::sin(s.alpha_t - s.psi) - s.V_p * cg * std::sin(s.alpha_p - s.psi)) / s.R_xy;
    r.dV_t = tgt.dV_t;
    r.dalpha_t = tgt.dalpha_t;
    return r;
}

DerivedGeometry derived_geometry(const EngagementState& s, const RateVector& rates) {
    if (s.R_xy <= 0.0) {
        throw degenerate_geometry_error("derived_geometry: R_xy = 0");
    }
    DerivedGeometry g;
    g.R = std::sqrt(s.R_xy * s.R_xy + s.R_z * s.R_z);
    g.theta = std::atan(-s.R_z / s.R_xy);
    g.dR = (s.R_xy * rates.dR_xy + s.R_z * rates.dR_z) / g.R;
    g.dtheta = (s.V_p * std::sin(s.gamma) * std::cos(g.theta) + rates.dR_xy * std::sin(g.theta)) / g.R;
    return g;
}

double collision_course_residual(const EngagementState& s) {
    return s.V_t * std::sin(s.alpha_t - s.psi) -
           s.V_p * std::cos(s.gamma) * std::sin(s.alpha_p - s.psi);
}

namespace {

// State layout for the integrator.
enum {
    iRxy, iRz, iPsi, iVp, iAlphap, iGamma, iVt, iAlphat,
    iXp, iYp, iZp, iXt, iYt,
    kDim
};

using Vec = std::array<double, kDim>;

Vec pack(const EngagementState& s) {
    return {s.R_xy, s.R_z, s.psi, s.V_p, s.alpha_p, s.gamma, s.V_t, s.alpha_t,
            s.x_p, s.y_p, s.z_p, s.x_t, s.y_t};
}

Vec derivs(const Vec& x, double t, const GuidanceCommand& cmd, const TargetProfile& target) {
    const TargetCommand tc = target_command(target, t);
    const double cg = std::cos(x[iGamma]);
    const double sg = std::sin(x[iGamma]);
    Vec d{};
    d[iRxy] = x[iVt] * std::cos(x[iAlphat] - x[iPsi]) - x[iVp] * cg * std::cos(x[iAlphap] - x[iPsi]);
    d[iRz] = -x[iVp] * sg;
    d[iPsi] = (x[iVt] * std::sin(x[iAlphat] - x[iPsi]) - x[iVp] * cg * std::sin(x[iAlphap] - x[iPsi])) / x[iRxy];
    d[iVp] = cmd.dV_p;
    d[iAlphap] = cmd.dalpha_p;
    d[iGamma] = cmd.dgamma;
    d[iVt] = tc.dV_t;
    d[iAlphat] = tc.dalpha_t;
    d[iXp] = x[iVp] * cg * std::cos(x[iAlphap]);
    d[iYp] = x[iVp] * cg * std::sin(x[iAlphap]);
    d[iZp] = x[iVp] * sg;
    d[iXt] = x[iVt] * std::cos(x[iAlphat]);
    d[iYt] = x[iVt] * std::sin(x[iAlphat]);
    return d;
}

}  // namespace

EngagementState step(const EngagementState& state, const GuidanceCommand& cmd,
                     const TargetProfile& target, double dt) {
    if (dt == 0.0) {
        return state;
    }
    const Vec x0 = pack(state);
    const Vec k1 = derivs(x0, state.t, cmd, target);
    Vec x1, x2, x3;
    for (int i = 0; i < kDim; ++i) x1[i] = x0[i] + 0.5 * dt * k1[i];
    const Vec k2 = derivs(x1, state.t + 0.5 * dt, cmd, target);
    for (int i = 0; i < kDim; ++i) x2[i] = x0[i] + 0.5 * dt * k2[i];
    const Vec k3 = derivs(x2, state.t + 0.5 * dt, cmd, target);
    for (int i = 0; i < kDim; ++i) x3[i] = x0[i] + dt * k3[i];
    const Vec k4 = derivs(x3, state.t + dt, cmd, target);

    Vec x;
    for (int i = 0; i < kDim; ++i) {
        x[i] = x0[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }

    EngagementState out;
    out.R_xy = x[iRxy];
    out.R_z = x[iRz];
    out.psi = wrap_pi(x[iPsi]);
    out.V_p = std::max(0.0, x[iVp]);
    out.alpha_p = wrap_pi(x[iAlphap]);
    out.gamma = std::max(-M_PI / 2.0, std::min(M_PI / 2.0, x[iGamma]));
    out.V_t = x[iVt];
    out.alpha_t = wrap_pi(x[iAlphat]);
    out.t = state.t + dt;
    out.x_p = x[iXp];
    out.y_p = x[iYp];
    out.z_p = x[iZp];
    out.x_t = x[iXt];
    out.y_t = x[iYt];

    for (double v : x) {
        if (!std::isfinite(v)) {
            throw integration_diverged_error("step: non-finite state");
        }
    }
    return out;
}

EngagementState make_state(double x_p, double y_p, double z_p, double x_t, double y_t,
                           double V_p, double alpha_p, double gamma, double V_t,
                           double alpha_t, double t) {
    EngagementState s;
    s.x_p = x_p;
    s.y_p = y_p;
    s.z_p = z_p;
    s.x_t = x_t;
    s.y_t = y_t;
    s.R_xy = std::hypot(x_t - x_p, y_t - y_p);
    s.R_z = -z_p;
    s.psi = std::atan2(y_t - y_p, x_t - x_p);
    s.V_p = V_p;
    s.alpha_p = wrap_pi(alpha_p);
    s.gamma = gamma;
    s.V_t = V_t;
    s.alpha_t = wrap_pi(alpha_t);
    s.t = t;
    return s;
}

}  // namespace smcland
