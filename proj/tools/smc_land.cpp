#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "smcland/config_io.hpp"
#include "smcland/presets.hpp"
#include "smcland/sim.hpp"

namespace fs = std::filesystem;
using namespace smcland;

namespace {

struct CommonOpts {
    std::string preset_name;
    std::string config_path;
    std::string out_dir = ".";
    std::string mode_override;  // "", "single", "two"
    std::string estimator = "exact";
    double dt_override = 0.0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_out = true) {
    auto* p = cmd->add_option("--preset", o.preset_name, "built-in scenario preset name");
    auto* c = cmd->add_option("--config", o.config_path, "path to a scenario config JSON");
    p->excludes(c);
    c->excludes(p);
    if (with_out) {
        cmd->add_option("--out", o.out_dir, "output directory")->capture_default_str();
    }
    cmd->add_option("--dt", o.dt_override, "integrator step override [s]");
    cmd->add_option("--mode", o.mode_override, "phase mode override: single|two")
        ->check(CLI::IsMember({"single", "two"}));
    cmd->add_option("--estimator", o.estimator, "target turn-acceleration source")
        ->check(CLI::IsMember({"exact", "finite-diff"}))
        ->capture_default_str();
}

ScenarioConfig resolve_config(const CommonOpts& o) {
    if (o.preset_name.empty() == o.config_path.empty()) {
        throw config_error("exactly one of --preset or --config is required");
    }
    ScenarioConfig cfg =
        o.preset_name.empty() ? load_config(o.config_path) : preset(o.preset_name);
    if (o.dt_override > 0.0) cfg.dt = o.dt_override;
    if (o.mode_override == "single") cfg.phases.mode = PhaseMode::SinglePhase;
    if (o.mode_override == "two") cfg.phases.mode = PhaseMode::TwoPhase;
    cfg.finite_diff_ddalpha = (o.estimator == "finite-diff");
    return cfg;
}

void write_json(const fs::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

TuningReport report_for(const ScenarioConfig& cfg) {
    const EngagementState s0 = initial_state(cfg);
    const TargetCommand tc0 = target_command(cfg.target, 0.0);
    const RateVector r0 = relative_rates(s0, tc0);
    const Phase ph0 = active_phase(s0.R_xy, cfg.phases);
    const GuidanceParams& p = phase_params(ph0, cfg.phases);
    const SlidingVector S0 = sliding_vector(s0, r0, p, ph0);
    return tuning_report(p, s0, r0, S0);
}

int cmd_run(const CommonOpts& o) {
    ScenarioConfig cfg = resolve_config(o);
    fs::create_directories(o.out_dir);
    const RunResult res = run_scenario(cfg);

    std::ofstream csv(fs::path(o.out_dir) / (cfg.name + ".csv"));
    write_csv(csv, res.log);
    write_json(fs::path(o.out_dir) / (cfg.name + "-summary.json"), summary_json(res.metrics));
    write_json(fs::path(o.out_dir) / (cfg.name + "-tuning.json"), tuning_json(report_for(cfg)));

    std::cout << cfg.name << ": " << summary_json(res.metrics)["outcome"].get<std::string>()
              << " at t=" << res.metrics.touchdown_time << " s\n";
    return res.metrics.outcome == RunOutcome::Touchdown ? 0 : 2;
}

int cmd_compare(const CommonOpts& o) {
    ScenarioConfig cfg = resolve_config(o);
    fs::create_directories(o.out_dir);
    const PhaseComparison c = compare_phases(cfg);
    write_json(fs::path(o.out_dir) / (cfg.name + "-compare.json"), comparison_json(c));
    std::cout << cfg.name << ": two-phase touchdown " << c.two_phase.touchdown_time
              << " s vs single-phase " << c.single_phase.touchdown_time << " s\n";
    const bool both = c.single_phase.outcome == RunOutcome::Touchdown &&
                      c.two_phase.outcome == RunOutcome::Touchdown;
    return both ? 0 : 2;
}

int cmd_tune(const CommonOpts& o) {
    ScenarioConfig cfg = resolve_config(o);
    std::cout << tuning_json(report_for(cfg)).dump(2) << '\n';
    return 0;
}

int cmd_batch(const CommonOpts& o, int runs, std::uint64_t seed) {
    ScenarioConfig base = resolve_config(o);
    fs::create_directories(o.out_dir);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> speed(1.0, 8.0);
    std::uniform_real_distribution<double> range(20.0, 200.0);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);

    nlohmann::json all = nlohmann::json::array();
    int landed = 0;
    for (int i = 0; i < runs; ++i) {
        ScenarioConfig cfg = base;
        cfg.V_p0 = speed(rng);
        cfg.R_xy0 = range(rng);
        cfg.psi0 = angle(rng);
        cfg.alpha_p0 = angle(rng);
        const RunResult res = run_scenario(cfg);
        nlohmann::json entry = summary_json(res.metrics);
        entry["run"] = i;
        entry["V_p0"] = cfg.V_p0;
        entry["R_xy0"] = cfg.R_xy0;
        entry["psi0"] = cfg.psi0;
        entry["alpha_p0"] = cfg.alpha_p0;
        all.push_back(entry);
        landed += res.metrics.outcome == RunOutcome::Touchdown;
    }
    write_json(fs::path(o.out_dir) / (base.name + "-batch.json"), all);
    std::cout << base.name << ": " << landed << "/" << runs << " touchdowns\n";
    return landed == runs ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sliding-mode terminal-angle landing guidance simulator"};
    app.require_subcommand(1);

    CommonOpts run_o, cmp_o, tune_o, batch_o;
    int batch_runs = 100;
    std::uint64_t batch_seed = 1;

    auto* run = app.add_subcommand("run", "run a scenario, write CSV + summary");
    add_common(run, run_o);
    auto* cmp = app.add_subcommand("compare", "run single-phase vs two-phase");
    add_common(cmp, cmp_o);
    auto* tune = app.add_subcommand("tune", "print the tuning report");
    add_common(tune, tune_o, false);
    auto* batch = app.add_subcommand("batch", "randomized-initial-condition suite");
    add_common(batch, batch_o);
    batch->add_option("--runs", batch_runs, "number of randomized runs")->capture_default_str();
    batch->add_option("--seed", batch_seed, "RNG seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_o);
        if (cmp->parsed()) return cmd_compare(cmp_o);
        if (tune->parsed()) return cmd_tune(tune_o);
        if (batch->parsed()) return cmd_batch(batch_o, batch_runs, batch_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
