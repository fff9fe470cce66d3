#pragma once

#include <string>
#include <vector>

#include "smcland/sim.hpp"

namespace smcland {

// Built-in scenario presets: table{1|2|3}-{stationary|sline|circular|sinusoidal}.
// Table-1 presets are single-phase, Table-2 two-phase with per-phase gain sets,
// Table-3 the close-range two-phase cases with multi-stage re-tuning.
std::vector<std::string> preset_names();
bool has_preset(const std::string& name);
ScenarioConfig preset(const std::string& name);

}  // namespace smcland
