#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mrcov/bench.hpp"

namespace mrcov {

nlohmann::json decomposition_json(const Decomposition& d, const DualGraph& dual,
                                  const GridMap& map);

nlohmann::json plan_json(const CoveragePlan& plan, const Metrics& metrics,
                         const ReebGraph& graph, const std::string& map_ref);

// Recompute the metrics block from a written plan document (round-trip check).
Metrics metrics_from_plan_json(const nlohmann::json& doc);

std::string render_svg(const GridMap& map, const CoveragePlan& plan);

}  // namespace mrcov
