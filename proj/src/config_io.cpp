#include "smcland/config_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "smcland/tuning.hpp"

namespace smcland {

using nlohmann::json;

namespace {

void require_keys(const json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& where) {
    for (const char* k : required) {
        if (!j.contains(k)) {
            throw config_error(where + ": missing field '" + k + "'");
        }
    }
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const char* k : required) known = known || key == k;
        for (const char* k : optional) known = known || key == k;
        if (!known) {
            throw config_error(where + ": unknown field '" + key + "'");
        }
    }
}

double num(const json& j, const char* key, const std::string& where) {
    const auto& v = j.at(key);
    if (!v.is_number()) {
        throw config_error(where + ": field '" + key + "' must be a number");
    }
    return v.get<double>();
}

GuidanceParams parse_params(const json& j, const std::string& where) {
    require_keys(j,
                 {"k_a", "k_b", "k_c", "k1", "k2", "k3", "m", "n", "zeta_des", "theta_des",
                  "M1", "M2", "N1", "N2", "N3"},
                 {"xi"}, where);
    GuidanceParams p;
    p.k_a = num(j, "k_a", where);
    p.k_b = num(j, "k_b", where);
    p.k_c = num(j, "k_c", where);
    p.k1 = num(j, "k1", where);
    p.k2 = num(j, "k2", where);
    p.k3 = num(j, "k3", where);
    if (!j.at("m").is_number_integer() || !j.at("n").is_number_integer()) {
        throw config_error(where + ": m, n must be integers");
    }
    p.m = j.at("m").get<int>();
    p.n = j.at("n").get<int>();
    p.zeta_des = num(j, "zeta_des", where);
    p.theta_des = num(j, "theta_des", where);
    if (j.contains("xi")) p.xi = num(j, "xi", where);
    p.M1 = num(j, "M1", where);
    p.M2 = num(j, "M2", where);
    p.N1 = num(j, "N1", where);
    p.N2 = num(j, "N2", where);
    p.N3 = num(j, "N3", where);
    return p;
}

json emit_params(const GuidanceParams& p) {
    return json{{"k_a", p.k_a}, {"k_b", p.k_b}, {"k_c", p.k_c},
                {"k1", p.k1},   {"k2", p.k2},   {"k3", p.k3},
                {"m", p.m},     {"n", p.n},     {"zeta_des", p.zeta_des},
                {"theta_des", p.theta_des},     {"xi", p.xi},
                {"M1", p.M1},   {"M2", p.M2},
                {"N1", p.N1},   {"N2", p.N2},   {"N3", p.N3}};
}

TargetProfile parse_target(const json& j) {
    require_keys(j, {"kind"},
                 {"V_t0", "alpha_t0", "turn_rate", "turn_amplitude", "turn_frequency",
                  "thrust_accel", "thrust_delta"},
                 "target");
    TargetProfile t;
    t.kind = target_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("V_t0")) t.V_t0 = num(j, "V_t0", "target");
    if (j.contains("alpha_t0")) t.alpha_t0 = num(j, "alpha_t0", "target");
    if (j.contains("turn_rate")) t.turn_rate = num(j, "turn_rate", "target");
    if (j.contains("turn_amplitude")) t.turn_amplitude = num(j, "turn_amplitude", "target");
    if (j.contains("turn_frequency")) t.turn_frequency = num(j, "turn_frequency", "target");
    if (j.contains("thrust_accel")) t.thrust_accel = num(j, "thrust_accel", "target");
    if (j.contains("thrust_delta")) t.thrust_delta = num(j, "thrust_delta", "target");
    if (t.V_t0 < 0.0) throw config_error("target: V_t0 must be >= 0");
    if (t.kind == TargetKind::Stationary && t.V_t0 != 0.0) {
        throw config_error("target: stationary target requires V_t0 = 0");
    }
    return t;
}

json emit_target(const TargetProfile& t) {
    return json{{"kind", to_string(t.kind)},
                {"V_t0", t.V_t0},
                {"alpha_t0", t.alpha_t0},
                {"turn_rate", t.turn_rate},
                {"turn_amplitude", t.turn_amplitude},
                {"turn_frequency", t.turn_frequency},
                {"thrust_accel", t.thrust_accel},
                {"thrust_delta", t.thrust_delta}};
}

}  // namespace

ScenarioConfig parse_config(const json& j) {
    require_keys(j, {"name", "initial", "target", "phases", "sim"},
                 {"retune", "single_phase_params"}, "config");
    ScenarioConfig cfg;
    cfg.name = j.at("name").get<std::string>();

    const json& ini = j.at("initial");
    require_keys(ini, {"R_xy", "R_z", "psi", "V_p", "alpha_p", "gamma"}, {}, "initial");
    cfg.R_xy0 = num(ini, "R_xy", "initial");
    cfg.R_z0 = num(ini, "R_z", "initial");
    cfg.psi0 = num(ini, "psi", "initial");
    cfg.V_p0 = num(ini, "V_p", "initial");
    cfg.alpha_p0 = num(ini, "alpha_p", "initial");
    cfg.gamma0 = num(ini, "gamma", "initial");
    if (cfg.R_xy0 <= 0.0) throw config_error("initial: R_xy must be positive");
    if (cfg.V_p0 < 0.0) throw config_error("initial: V_p must be >= 0");

    cfg.target = parse_target(j.at("target"));

    const json& ph = j.at("phases");
    require_keys(ph, {"mode", "phase2"}, {"R_switch", "phase1"}, "phases");
    const std::string mode = ph.at("mode").get<std::string>();
    if (mode == "single") {
        cfg.phases.mode = PhaseMode::SinglePhase;
    } else if (mode == "two") {
        cfg.phases.mode = PhaseMode::TwoPhase;
        if (!ph.contains("R_switch") || !ph.contains("phase1")) {
            throw config_error("phases: two-phase mode requires R_switch and phase1");
        }
        cfg.phases.R_switch = num(ph, "R_switch", "phases");
        if (cfg.phases.R_switch <= 0.0) {
            throw config_error("phases: R_switch must be positive");
        }
        cfg.phases.phase1_params = parse_params(ph.at("phase1"), "phases.phase1");
    } else {
        throw config_error("phases: mode must be 'single' or 'two'");
    }
    cfg.phases.phase2_params = parse_params(ph.at("phase2"), "phases.phase2");

    if (j.contains("single_phase_params")) {
        cfg.single_phase_params = parse_params(j.at("single_phase_params"), "single_phase_params");
    }

    if (j.contains("retune")) {
        const json& rt = j.at("retune");
        require_keys(rt, {"enabled"}, {"k_a_numerator", "k_b_ratio", "k_c_ratio"}, "retune");
        cfg.retune.enabled = rt.at("enabled").get<bool>();
        if (rt.contains("k_a_numerator")) cfg.retune.k_a_numerator = num(rt, "k_a_numerator", "retune");
        if (rt.contains("k_b_ratio")) cfg.retune.k_b_ratio = num(rt, "k_b_ratio", "retune");
        if (rt.contains("k_c_ratio")) cfg.retune.k_c_ratio = num(rt, "k_c_ratio", "retune");
    }

    const json& sim = j.at("sim");
    require_keys(sim, {"dt", "t_max"},
                 {"R_xy_td", "R_z_td", "guidance_divisor", "finite_diff_ddalpha",
                  "skip_validation"},
                 "sim");
    cfg.dt = num(sim, "dt", "sim");
    cfg.t_max = num(sim, "t_max", "sim");
    if (sim.contains("R_xy_td")) cfg.R_xy_td = num(sim, "R_xy_td", "sim");
    if (sim.contains("R_z_td")) cfg.R_z_td = num(sim, "R_z_td", "sim");
    if (sim.contains("guidance_divisor")) cfg.guidance_divisor = sim.at("guidance_divisor").get<int>();
    if (sim.contains("finite_diff_ddalpha")) cfg.finite_diff_ddalpha = sim.at("finite_diff_ddalpha").get<bool>();
    if (sim.contains("skip_validation")) cfg.skip_validation = sim.at("skip_validation").get<bool>();
    if (cfg.dt <= 0.0) throw config_error("sim: dt must be positive");
    if (cfg.t_max <= 0.0) throw config_error("sim: t_max must be positive");
    if (cfg.R_xy_td <= 0.0 || cfg.R_z_td <= 0.0) {
        throw config_error("sim: touchdown thresholds must be positive");
    }
    if (cfg.guidance_divisor < 1) throw config_error("sim: guidance_divisor must be >= 1");

    if (!cfg.skip_validation) {
        auto check = [](const GuidanceParams& p, const std::string& where) {
            for (const auto& v : validate(p)) {
                throw config_error(where + ": " + v);
            }
        };
        if (cfg.phases.mode == PhaseMode::TwoPhase) {
            check(cfg.phases.phase1_params, "phases.phase1");
        }
        check(cfg.phases.phase2_params, "phases.phase2");
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw config_error(std::string("JSON parse error: ") + e.what());
    }
    return parse_config(j);
}

json emit_config(const ScenarioConfig& cfg) {
    json j;
    j["name"] = cfg.name;
    j["initial"] = {{"R_xy", cfg.R_xy0}, {"R_z", cfg.R_z0},   {"psi", cfg.psi0},
                    {"V_p", cfg.V_p0},   {"alpha_p", cfg.alpha_p0}, {"gamma", cfg.gamma0}};
    j["target"] = emit_target(cfg.target);
    json ph;
    ph["mode"] = cfg.phases.mode == PhaseMode::TwoPhase ? "two" : "single";
    if (cfg.phases.mode == PhaseMode::TwoPhase) {
        ph["R_switch"] = cfg.phases.R_switch;
        ph["phase1"] = emit_params(cfg.phases.phase1_params);
    }
    ph["phase2"] = emit_params(cfg.phases.phase2_params);
    j["phases"] = ph;
    if (cfg.single_phase_params) {
        j["single_phase_params"] = emit_params(*cfg.single_phase_params);
    }
    j["retune"] = {{"enabled", cfg.retune.enabled},
                   {"k_a_numerator", cfg.retune.k_a_numerator},
                   {"k_b_ratio", cfg.retune.k_b_ratio},
                   {"k_c_ratio", cfg.retune.k_c_ratio}};
    j["sim"] = {{"dt", cfg.dt},
                {"t_max", cfg.t_max},
                {"R_xy_td", cfg.R_xy_td},
                {"R_z_td", cfg.R_z_td},
                {"guidance_divisor", cfg.guidance_divisor},
                {"finite_diff_ddalpha", cfg.finite_diff_ddalpha},
                {"skip_validation", cfg.skip_validation}};
    return j;
}

const char* const kCsvHeader =
    "t,x_p,y_p,z_p,x_t,y_t,R_xy,R_z,R,psi,theta,V_p,alpha_p,gamma,V_t,alpha_t,"
    "S1,S2,S3,dVp_raw,dalphap_raw,dgamma_raw,dVp_cmd,dalphap_cmd,dgamma_cmd,phase,stage";

void write_csv(std::ostream& os, const TrajectoryLog& log) {
    os << kCsvHeader << '\n';
    char buf[32];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        os << buf << sep;
    };
    for (const LogRecord& r : log.records) {
        put(r.t, ','); put(r.x_p, ','); put(r.y_p, ','); put(r.z_p, ',');
        put(r.x_t, ','); put(r.y_t, ','); put(r.R_xy, ','); put(r.R_z, ',');
        put(r.R, ','); put(r.psi, ','); put(r.theta, ','); put(r.V_p, ',');
        put(r.alpha_p, ','); put(r.gamma, ','); put(r.V_t, ','); put(r.alpha_t, ',');
        put(r.S1, ','); put(r.S2, ','); put(r.S3, ',');
        put(r.dVp_raw, ','); put(r.dalphap_raw, ','); put(r.dgamma_raw, ',');
        put(r.dVp_cmd, ','); put(r.dalphap_cmd, ','); put(r.dgamma_cmd, ',');
        os << r.phase << ',' << r.stage << '\n';
    }
}

json summary_json(const SummaryMetrics& m) {
    const char* outcome = m.outcome == RunOutcome::Touchdown ? "touchdown"
                          : m.outcome == RunOutcome::Timeout ? "timeout"
                                                             : "diverged";
    return json{{"outcome", outcome},
                {"touchdown_time", m.touchdown_time},
                {"terminal_dR_xy", m.terminal_dR_xy},
                {"terminal_dR_z", m.terminal_dR_z},
                {"terminal_azimuth_err", m.terminal_azimuth_err},
                {"terminal_theta_err", m.terminal_theta_err},
                {"terminal_speed_err", m.terminal_speed_err},
                {"terminal_V_p", m.terminal_V_p},
                {"terminal_heading_err", m.terminal_heading_err},
                {"terminal_gamma", m.terminal_gamma},
                {"peak_V_p", m.peak_V_p},
                {"peak_dR_xy", m.peak_dR_xy},
                {"peak_dV_p", m.peak_dV_p},
                {"peak_dalpha_p", m.peak_dalpha_p},
                {"peak_dgamma", m.peak_dgamma},
                {"reach_time_S1", m.reach_time_S1},
                {"reach_time_S2", m.reach_time_S2},
                {"reach_time_S3", m.reach_time_S3}};
}

json comparison_json(const PhaseComparison& c) {
    return json{{"single_phase", summary_json(c.single_phase)},
                {"two_phase", summary_json(c.two_phase)},
                {"delta_peak_dV_p", c.delta_peak_dV_p},
                {"delta_peak_dalpha_p", c.delta_peak_dalpha_p},
                {"delta_peak_dgamma", c.delta_peak_dgamma},
                {"delta_touchdown_time", c.delta_touchdown_time}};
}

json tuning_json(const TuningReport& r) {
    return json{{"t_reach1", r.t_reach1},
                {"t_reach2", r.t_reach2},
                {"t_reach3", r.t_reach3},
                {"rxy_rate_bound", r.rxy_rate_bound},
                {"t_R1_lower", r.t_R1_lower},
                {"k1_min", r.k1_min},
                {"suggested_k2", r.suggested_k2},
                {"suggested_k3", r.suggested_k3},
                {"violations", r.violations},
                {"notes", r.notes}};
}

}  // namespace smcland
