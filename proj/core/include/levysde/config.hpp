#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levysde/experiment.hpp"

namespace levysde {

/// key = YAML scalar/flow text, applied after the document in order (last wins).
using ConfigOverride = std::pair<std::string, std::string>;

/**
 * Parses a YAML (or JSON) study document.
 *
 * Required keys: alphas, drift, master_seed. Optional: preset, ref_level,
 * levels, n_sims, y0, horizon. `drift` is a corpus label or a map with a
 * `name` key plus parameter overrides. Unknown keys are errors. Missing
 * optional keys take the desk-scale defaults; a preset is applied before
 * explicit keys. Throws ConfigError.
 */
StudyConfig parse_config(std::string_view text, const std::vector<ConfigOverride>& overrides = {});

/// Document that parse_config maps back to an equal config. Custom drifts are rejected.
std::string serialize_config(const StudyConfig& config);

}  // namespace levysde
