#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "smcland/sim.hpp"

namespace smcland {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strict JSON schema: unknown keys rejected, all angles in radians,
// lengths in meters, times in seconds.
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);
nlohmann::json emit_config(const ScenarioConfig& cfg);

// Fixed CSV schema:
// t,x_p,y_p,z_p,x_t,y_t,R_xy,R_z,R,psi,theta,V_p,alpha_p,gamma,V_t,alpha_t,
// S1,S2,S3,dVp_raw,dalphap_raw,dgamma_raw,dVp_cmd,dalphap_cmd,dgamma_cmd,phase,stage
extern const char* const kCsvHeader;
void write_csv(std::ostream& os, const TrajectoryLog& log);

nlohmann::json summary_json(const SummaryMetrics& m);
nlohmann::json comparison_json(const PhaseComparison& c);
nlohmann::json tuning_json(const TuningReport& r);

}  // namespace smcland
