#pragma once

// Internal JSON conversions shared by metrics and harness; not installed.

#include <nlohmann/json.hpp>

#include "conceptgraph/metrics.hpp"

namespace conceptgraph {

nlohmann::json report_to_json_value(const MetricsReport& report);
MetricsReport report_from_json_value(const nlohmann::json& object);

}  // namespace conceptgraph
