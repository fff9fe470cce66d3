#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "smcland/angles.hpp"
#include "smcland/engagement.hpp"
#include "smcland/guidance.hpp"
#include "smcland/presets.hpp"
#include "smcland/sim.hpp"

using namespace smcland;

namespace {

EngagementState far_state(double V_t, double alpha_t) {
    EngagementState s;
    s.R_xy = 100.0;
    s.R_z = -100.0 * std::sqrt(3.0);
    s.psi = -M_PI / 3.0;
    s.V_p = 5.0;
    s.alpha_p = -M_PI / 3.0;
    s.gamma = 0.0;
    s.V_t = V_t;
    s.alpha_t = alpha_t;
    s.x_p = -s.R_xy * std::cos(s.psi);
    s.y_p = -s.R_xy * std::sin(s.psi);
    s.z_p = -s.R_z;
    return s;
}

// Explicit-Euler reference propagation of the same ODE at a much finer step.
EngagementState euler_oracle(EngagementState s, const GuidanceCommand& cmd,
                             const TargetProfile& target, double dt, double h) {
    const long steps = std::lround(dt / h);
    for (long i = 0; i < steps; ++i) {
        const TargetCommand tc = target_command(target, s.t);
        const double cg = std::cos(s.gamma);
        const double sg = std::sin(s.gamma);
        const double dR_xy =
            s.V_t * std::cos(s.alpha_t - s.psi) - s.V_p * cg * std::cos(s.alpha_p - s.psi);
        const double dR_z = -s.V_p * sg;
        const double dpsi =
            (s.V_t * std::sin(s.alpha_t - s.psi) - s.V_p * cg * std::sin(s.alpha_p - s.psi)) /
            s.R_xy;
        s.x_p += h * s.V_p * cg * std::cos(s.alpha_p);
        s.y_p += h * s.V_p * cg * std::sin(s.alpha_p);
        s.z_p += h * s.V_p * sg;
        s.x_t += h * s.V_t * std::cos(s.alpha_t);
        s.y_t += h * s.V_t * std::sin(s.alpha_t);
        s.R_xy += h * dR_xy;
        s.R_z += h * dR_z;
        s.psi += h * dpsi;
        s.V_p += h * cmd.dV_p;
        s.alpha_p += h * cmd.dalpha_p;
        s.gamma += h * cmd.dgamma;
        s.V_t += h * tc.dV_t;
        s.alpha_t += h * tc.dalpha_t;
        s.t += h;
    }
    return s;
}

}  // namespace

TEST_CASE("relative rates, stationary far state") {
    const EngagementState s = far_state(0.0, 0.0);
    const RateVector r = relative_rates(s, TargetCommand{});
    CHECK(r.dR_xy == doctest::Approx(-5.0).epsilon(1e-12));
    CHECK(r.dR_z == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.dpsi == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("relative rates, moving target") {
    const EngagementState s = far_state(3.0, 0.0);
    const RateVector r = relative_rates(s, TargetCommand{});
    // 3*cos(pi/3) - 5 and 3*sin(pi/3)/100.
    CHECK(r.dR_xy == doctest::Approx(-3.5).epsilon(1e-12));
    CHECK(r.dpsi == doctest::Approx(0.025980762113533).epsilon(1e-12));
}

TEST_CASE("derived geometry of the far state") {
    const EngagementState s = far_state(0.0, 0.0);
    const RateVector r = relative_rates(s, TargetCommand{});
    const DerivedGeometry g = derived_geometry(s, r);
    CHECK(g.R == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(g.theta == doctest::Approx(M_PI / 3.0).epsilon(1e-12));
    CHECK(g.dR == doctest::Approx(-2.5).epsilon(1e-12));
    // (V_p sin(gamma) cos(theta) + dR_xy sin(theta)) / R with gamma = 0.
    CHECK(g.dtheta == doctest::Approx(-5.0 * std::sin(M_PI / 3.0) / 200.0).epsilon(1e-12));
}

TEST_CASE("collision course residual") {
    EngagementState s = far_state(0.0, 0.0);
    CHECK(collision_course_residual(s) == doctest::Approx(0.0).epsilon(1e-12));
    s.V_t = 3.0;
    s.alpha_t = 0.5;
    CHECK(collision_course_residual(s) ==
          doctest::Approx(3.0 * std::sin(0.5 - s.psi)).epsilon(1e-12));
}

TEST_CASE("degenerate geometry throws") {
    EngagementState s = far_state(0.0, 0.0);
    s.R_xy = 0.0;
    CHECK_THROWS_AS(relative_rates(s, TargetCommand{}), degenerate_geometry_error);
    CHECK_THROWS_AS(derived_geometry(s, RateVector{}), degenerate_geometry_error);
}

TEST_CASE("zero step is identity") {
    const EngagementState s = far_state(3.0, 0.3);
    TargetProfile tgt;
    tgt.kind = TargetKind::ConstantVelocity;
    tgt.V_t0 = 3.0;
    const EngagementState out = step(s, GuidanceCommand{}, tgt, 0.0);
    CHECK(out.R_xy == s.R_xy);
    CHECK(out.psi == s.psi);
    CHECK(out.t == s.t);
}

TEST_CASE("single RK4 step vs fine Euler oracle") {
    const EngagementState s = far_state(0.0, 0.0);
    TargetProfile tgt;  // stationary
    const double dt = 1e-3;
    const EngagementState rk = step(s, GuidanceCommand{}, tgt, dt);
    const EngagementState ref = euler_oracle(s, GuidanceCommand{}, tgt, dt, 1e-6);
    CHECK(rk.R_xy == doctest::Approx(100.0 - 5.0 * dt).epsilon(1e-7));
    CHECK(rk.R_xy == doctest::Approx(ref.R_xy).epsilon(1e-9));
    CHECK(rk.R_z == doctest::Approx(ref.R_z).epsilon(1e-9));
}

TEST_CASE("RK4 order: halving dt shrinks the error at least 8x") {
    // Smooth commands and a time-varying target so every channel is active.
    EngagementState s = far_state(3.0, 0.2);
    s.gamma = 0.1;
    GuidanceCommand cmd;
    cmd.dV_p = 0.1;
    cmd.dalpha_p = 0.05;
    cmd.dgamma = 0.02;
    TargetProfile tgt;
    tgt.kind = TargetKind::SinusoidalTurn;
    tgt.V_t0 = 3.0;
    tgt.alpha_t0 = 0.2;
    tgt.turn_amplitude = M_PI / 6.0;
    tgt.turn_frequency = M_PI / 4.0;

    const double horizon = 1.0;
    auto propagate = [&](double dt) {
        EngagementState x = s;
        const long n = std::lround(horizon / dt);
        for (long i = 0; i < n; ++i) x = step(x, cmd, tgt, dt);
        return x;
    };
    const EngagementState ref = euler_oracle(s, cmd, tgt, horizon, 1e-6);
    auto err = [&](const EngagementState& x) {
        return std::abs(x.R_xy - ref.R_xy) + std::abs(x.R_z - ref.R_z) +
               std::abs(wrap_pi(x.psi - ref.psi));
    };
    const double e1 = err(propagate(1e-1));
    const double e2 = err(propagate(5e-2));
    CHECK(e1 / e2 >= 8.0);
}

TEST_CASE("dtheta matches finite difference of atan(-R_z/R_xy)") {
    EngagementState s = far_state(3.0, 0.4);
    s.gamma = 0.2;
    GuidanceCommand cmd;
    cmd.dalpha_p = 0.1;
    TargetProfile tgt;
    tgt.kind = TargetKind::ConstantTurn;
    tgt.V_t0 = 3.0;
    tgt.alpha_t0 = 0.4;
    tgt.turn_rate = 0.1;
    const double dt = 1e-4;
    for (int i = 0; i < 200; ++i) {
        const RateVector r = relative_rates(s, target_command(tgt, s.t));
        const DerivedGeometry g = derived_geometry(s, r);
        const EngagementState next = step(s, cmd, tgt, dt);
        const double theta_next = std::atan(-next.R_z / next.R_xy);
        const double fd = (theta_next - g.theta) / dt;
        CHECK(std::abs(g.dtheta - fd) < 1e-4);
        s = next;
    }
}

TEST_CASE("dual propagation: relative state tracks pose differences") {
    ScenarioConfig cfg = preset("table1-sline");
    cfg.t_max = 60.0;
    const RunResult res = run_scenario(cfg);
    for (const LogRecord& rec : res.log.records) {
        const double rxy_pose = std::hypot(rec.x_t - rec.x_p, rec.y_t - rec.y_p);
        CHECK(std::abs(rec.R_xy - rxy_pose) < 1e-5);
        const double psi_pose = std::atan2(rec.y_t - rec.y_p, rec.x_t - rec.x_p);
        CHECK(std::abs(wrap_pi(rec.psi - psi_pose)) < 1e-5);
        // R_z and -z_p integrate the same expression.
        CHECK(std::abs(rec.R_z + rec.z_p) < 1e-9);
    }
}

TEST_CASE("make_state produces consistent relative variables") {
    const EngagementState s =
        make_state(-30.0, 40.0, 25.0, 10.0, 4.0, 5.0, 0.3, 0.1, 3.0, 0.2);
    CHECK(s.R_xy == doctest::Approx(std::hypot(40.0, -36.0)).epsilon(1e-12));
    CHECK(s.R_z == doctest::Approx(-25.0).epsilon(1e-12));
    CHECK(s.psi == doctest::Approx(std::atan2(-36.0, 40.0)).epsilon(1e-12));
}
