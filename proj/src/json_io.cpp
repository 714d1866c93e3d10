#include "mrcov/json_io.hpp"

#include <algorithm>

namespace mrcov {

nlohmann::json decomposition_json(const Decomposition& d, const DualGraph& dual,
                                  const GridMap& map) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : d.cells) {
    cells.push_back({{"id", c.id},
                     {"columns", {c.x_left, c.x_right}},
                     {"area", c.area},
                     {"width", c.width()},
                     {"center", {{"x", c.center.x}, {"y", c.center.y}}}});
  }
  nlohmann::json vertices = nlohmann::json::array();
  for (const ReebVertex& v : d.reeb.vertices) {
    vertices.push_back({{"id", v.id}, {"x", v.pos.x}, {"y", v.pos.y}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const ReebEdge& e : d.reeb.edges) {
    edges.push_back({{"id", e.id},
                     {"endpoints", {e.u, e.v}},
                     {"w_c", e.w_c},
                     {"w_t", e.w_t},
                     {"c_e", e.c_e}});
  }
  nlohmann::json dual_edges = nlohmann::json::array();
  for (const DualGraph::Edge& e : dual.edges) {
    dual_edges.push_back({{"pair", {e.a, e.b}}, {"w_d", e.w_d}});
  }
  return {{"width", map.width()},
          {"height", map.height()},
          {"cells", cells},
          {"vertices", vertices},
          {"edges", edges},
          {"dual_edges", dual_edges},
          {"start_vertex", d.reeb.start_vertex},
          {"covered_area", d.covered_area},
          {"excluded_free", d.excluded_free}};
}

nlohmann::json plan_json(const CoveragePlan& plan, const Metrics& metrics,
                         const ReebGraph& graph, const std::string& map_ref) {
  nlohmann::json robots = nlohmann::json::array();
  for (std::size_t i = 0; i < plan.robots.size(); ++i) {
    const RobotTour& r = plan.robots[i];
    nlohmann::json cells = nlohmann::json::array();
    nlohmann::json steps = nlohmann::json::array();
    for (const TourStep& s : r.steps) {
      if (!s.duplicate) cells.push_back(s.edge);
      steps.push_back(
          {{"edge", s.edge},
           {"from", s.from},
           {"to", s.to},
           {"duplicate", s.duplicate},
           {"cost", s.duplicate ? graph.edges[s.edge].w_t : graph.edges[s.edge].w_c}});
    }
    nlohmann::json waypoints = nlohmann::json::array();
    const RobotPath& path = plan.paths[i];
    for (const Waypoint& w : path.waypoints) {
      waypoints.push_back({{"x", w.pos.x},
                           {"y", w.pos.y},
                           {"kind", w.kind == WaypointKind::Cover ? "cover" : "transit"}});
    }
    nlohmann::json robot = {{"id", r.robot},
                            {"idle", r.idle},
                            {"coverage_cost", r.coverage_cost},
                            {"travel_cost", r.travel_cost},
                            {"total_cost", r.total_cost},
                            {"approach_cost", r.approach_cost},
                            {"retreat_cost", r.retreat_cost},
                            {"cover_length", path.cover_length},
                            {"transit_length", path.transit_length},
                            {"cells", cells},
                            {"steps", steps},
                            {"waypoints", waypoints}};
    if (r.cluster >= 0) robot["cluster"] = r.cluster;
    robots.push_back(robot);
  }
  nlohmann::json doc = {
      {"map", map_ref},
      {"algorithm", to_string(plan.algorithm)},
      {"k", plan.k},
      {"start", {{"x", plan.start.x}, {"y", plan.start.y}}},
      {"start_vertex", plan.start_vertex},
      {"single_tour_cost", plan.single_tour_cost},
      {"robots", robots},
      {"metrics",
       {{"utilization_pct", metrics.utilization_pct},
        {"max_cost", metrics.max_cost},
        {"max_cost_ratio", metrics.max_cost_ratio}}}};
  if (plan.algorithm == Algorithm::Crc || plan.algorithm == Algorithm::Fhk) {
    doc["split"] = {{"s_max", plan.s_max}, {"boundaries", plan.boundaries}};
  }
  if (plan.algorithm == Algorithm::Cac) {
    nlohmann::json clusters = nlohmann::json::array();
    for (std::size_t h = 0; h < plan.clusters.size(); ++h) {
      clusters.push_back({{"cells", plan.clusters[h]}, {"limit", plan.cluster_limits[h]}});
    }
    doc["clusters"] = clusters;
  }
  return doc;
}

Metrics metrics_from_plan_json(const nlohmann::json& doc) {
  Metrics m;
  m.k = doc.at("k").get<int>();
  double reference = doc.at("single_tour_cost").get<double>();
  int coverers = 0;
  for (const auto& robot : doc.at("robots")) {
    double total = robot.at("total_cost").get<double>();
    m.robot_costs.push_back(total);
    m.max_cost = std::max(m.max_cost, total);
    if (!robot.at("idle").get<bool>()) ++coverers;
  }
  m.utilization_pct = 100.0 * coverers / m.k;
  m.idle_count = m.k - coverers;
  m.max_cost_ratio = m.max_cost / reference;
  return m;
}

}  // namespace mrcov
