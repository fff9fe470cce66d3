#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "smcland/target.hpp"

using namespace smcland;

TEST_CASE("stationary target commands vanish") {
    TargetProfile p;
    const TargetCommand c = target_command(p, 12.3);
    CHECK(c.dV_t == 0.0);
    CHECK(c.dalpha_t == 0.0);
    CHECK(c.ddalpha_t == 0.0);
}

TEST_CASE("constant turn") {
    TargetProfile p;
    p.kind = TargetKind::ConstantTurn;
    p.V_t0 = 3.0;
    p.turn_rate = M_PI / 6.0;
    for (double t : {0.0, 1.7, 42.0}) {
        const TargetCommand c = target_command(p, t);
        CHECK(c.dalpha_t == doctest::Approx(0.523599).epsilon(1e-6));
        CHECK(c.ddalpha_t == 0.0);
        CHECK(c.dV_t == 0.0);
    }
}

TEST_CASE("sinusoidal turn and its analytic derivative") {
    TargetProfile p;
    p.kind = TargetKind::SinusoidalTurn;
    p.V_t0 = 3.0;
    p.turn_amplitude = M_PI / 6.0;
    p.turn_frequency = M_PI / 4.0;
    const TargetCommand at2 = target_command(p, 2.0);
    CHECK(at2.dalpha_t == doctest::Approx(0.523599).epsilon(1e-6));
    CHECK(at2.ddalpha_t == doctest::Approx(0.0).epsilon(1e-12));
    const TargetCommand at0 = target_command(p, 0.0);
    CHECK(at0.dalpha_t == 0.0);
    CHECK(at0.ddalpha_t == doctest::Approx((M_PI / 6.0) * (M_PI / 4.0)).epsilon(1e-12));
}

TEST_CASE("a_t and delta reconstruction") {
    TargetProfile thrust;
    thrust.kind = TargetKind::ThrustManeuver;
    thrust.V_t0 = 2.0;
    thrust.thrust_accel = 1.4;
    thrust.thrust_delta = 0.6;
    TargetProfile turn;
    turn.kind = TargetKind::ConstantTurn;
    turn.V_t0 = 3.0;
    turn.turn_rate = -0.25;
    for (const TargetProfile& p : {thrust, turn}) {
        for (double t : {0.0, 0.5, 3.0}) {
            const TargetCommand c = target_command(p, t);
            CHECK(c.a_t * std::cos(c.delta) == doctest::Approx(c.dV_t).epsilon(1e-12));
            CHECK(c.a_t * std::sin(c.delta) == doctest::Approx(c.dalpha_t).epsilon(1e-12));
        }
    }
}

TEST_CASE("kind string round trip") {
    for (TargetKind k : {TargetKind::Stationary, TargetKind::ConstantVelocity,
                         TargetKind::ConstantTurn, TargetKind::SinusoidalTurn,
                         TargetKind::ThrustManeuver}) {
        CHECK(target_kind_from_string(to_string(k)) == k);
    }
    CHECK_THROWS(target_kind_from_string("warp-drive"));
}

TEST_CASE("turn accel estimator backward difference") {
    TurnAccelEstimator est;
    CHECK(!est.ready());
    CHECK_THROWS_AS(est.estimate(), insufficient_history_error);
    est.push(0.0, 0.0);
    CHECK(!est.ready());
    est.push(0.1, 0.05);
    CHECK(est.ready());
    CHECK(est.estimate() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("estimator on a constant rate history") {
    TurnAccelEstimator est;
    est.push(0.0, 0.2);
    est.push(0.5, 0.2);
    est.push(1.0, 0.2);
    CHECK(est.estimate() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("estimator converges O(dt) to the analytic value") {
    TargetProfile p;
    p.kind = TargetKind::SinusoidalTurn;
    p.V_t0 = 3.0;
    p.turn_amplitude = M_PI / 6.0;
    p.turn_frequency = M_PI / 4.0;
    auto error_at = [&](double dt) {
        TurnAccelEstimator est;
        est.push(1.0 - dt, target_command(p, 1.0 - dt).dalpha_t);
        est.push(1.0, target_command(p, 1.0).dalpha_t);
        return std::abs(est.estimate() - target_command(p, 1.0).ddalpha_t);
    };
    const double e3 = error_at(1e-3);
    const double e4 = error_at(1e-4);
    CHECK(e3 < 1e-2);
    CHECK(e4 < e3);
    CHECK(e3 / e4 > 5.0);
}
