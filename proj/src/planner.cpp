#include "mrcov/planner.hpp"

#include <stdexcept>

namespace mrcov {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Crc: return "crc";
    case Algorithm::Cac: return "cac";
    case Algorithm::Nrc: return "nrc";
    case Algorithm::Fhk: return "fhk";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "crc") return Algorithm::Crc;
  if (name == "cac") return Algorithm::Cac;
  if (name == "nrc") return Algorithm::Nrc;
  if (name == "fhk") return Algorithm::Fhk;
  throw std::invalid_argument("unknown algorithm: " + name);
}

Workspace build_workspace(GridMap map, PixelPoint start, bool largest_component,
                          Exec exec) {
  Workspace ws{std::move(map), start, {}, {}, {}, {}, {}};
  ws.decomp = decompose(ws.map, largest_component);
  assign_weights(ws.decomp, ws.map, start, exec);
  ws.dual = build_dual(ws.decomp);
  ws.costs = path_costs(ws.decomp.reeb);
  ws.multi = eulerianize(ws.decomp.reeb);
  ws.tour = euler_tour(ws.multi, ws.decomp.reeb.start_vertex);
  return ws;
}

namespace {

// One split at exactly team size j, before the dominance sweep.
CoveragePlan plan_at(const Workspace& ws, Algorithm algorithm, int j) {
  CoveragePlan plan;
  plan.algorithm = algorithm;
  plan.k = j;
  plan.start = ws.start;
  plan.start_vertex = ws.decomp.reeb.start_vertex;
  plan.single_tour_cost = ws.tour.total_cost;

  switch (algorithm) {
    case Algorithm::Crc:
    case Algorithm::Fhk: {
      SplitMode mode = algorithm == Algorithm::Crc ? SplitMode::CrcTravel
                                                   : SplitMode::FhkCoverage;
      auto [robots, report] =
          split_frederickson(ws.tour, ws.decomp.reeb, ws.costs, j, mode);
      plan.robots = std::move(robots);
      plan.s_max = report.s_max;
      plan.boundaries = std::move(report.boundaries);
      break;
    }
    case Algorithm::Nrc: {
      plan.robots = split_naive(ws.tour, ws.decomp.reeb, ws.costs, j);
      break;
    }
    case Algorithm::Cac: {
      ClusterPlan cp = cluster_area(ws.decomp, ws.dual, ws.costs, j);
      plan.clusters = std::move(cp.clusters);
      plan.cluster_limits = std::move(cp.limits);
      plan.robots = std::move(cp.tours);
      break;
    }
  }
  return plan;
}

double plan_max_cost(const CoveragePlan& plan) {
  double m = 0.0;
  for (const RobotTour& r : plan.robots) m = std::max(m, r.total_cost);
  return m;
}

}  // namespace

CoveragePlan plan_coverage(const Workspace& ws, Algorithm algorithm, int k,
                           const FootprintSpec& footprint) {
  if (k < 1) throw std::invalid_argument("robot count must be >= 1");

  // Dominance sweep: k robots can always run a smaller team's plan with the
  // rest idle, so take the best split over team sizes up to k. This keeps
  // the max cost non-increasing in k for every algorithm.
  CoveragePlan best;
  double best_max = 0.0;
  for (int j = 1; j <= k; ++j) {
    CoveragePlan candidate = plan_at(ws, algorithm, j);
    double cand_max = plan_max_cost(candidate);
    if (j == 1 || cand_max < best_max - 1e-9) {
      best = std::move(candidate);
      best_max = cand_max;
    }
  }

  best.k = k;
  while (static_cast<int>(best.robots.size()) < k) {
    RobotTour idle;
    idle.robot = static_cast<int>(best.robots.size());
    best.robots.push_back(idle);
  }
  best.paths = build_paths(best.robots, ws.decomp, ws.map, ws.start, footprint);
  return best;
}

}  // namespace mrcov
