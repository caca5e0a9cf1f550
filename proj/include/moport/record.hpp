#pragma once

#include <nlohmann/json.hpp>

#include "moport/algorithms.hpp"

namespace moport {

nlohmann::ordered_json config_to_json(const MoeadConfig& cfg);
MoeadConfig config_from_json(const nlohmann::json& j);

nlohmann::ordered_json record_to_json(const RunRecord& record);
RunRecord record_from_json(const nlohmann::json& j);

} // namespace moport
