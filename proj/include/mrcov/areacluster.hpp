#pragma once

#include <vector>

#include "mrcov/routesplit.hpp"

namespace mrcov {

struct ClusterPlan {
  std::vector<std::vector<int>> clusters;  // cell ids, BFS acceptance order
  std::vector<double> limits;              // size cap used while cluster grew
  std::vector<int> seeds;
  std::vector<RobotTour> tours;            // one per cluster, robot == cluster
};

// Sum of member areas plus the travel distance (sp_t) from the start vertex
// to the nearest member's leftmost critical vertex.
double cluster_size(const std::vector<int>& cells, const ReebGraph& g,
                    const DualGraph& dual, const PathCosts& pc);

// Greedy limit-bounded clustering over the dual graph: seeds in (y, x) order
// of cell centers, BFS acceptance while cluster_size stays within
// L + S / (k - h + 1), full cluster size deducted from S after each close.
// Cells left over after k clusters join the nearest adjacent cluster.
std::vector<std::vector<int>> cluster_cells(const Decomposition& d, const DualGraph& dual,
                                            const PathCosts& pc, int k);

// Limit schedule produced by the same greedy run.
std::vector<double> compute_limits(const Decomposition& d, const DualGraph& dual,
                                   const PathCosts& pc, int k);

// ECC over the induced Reeb subgraph of one cluster, entered at the induced
// vertex nearest (sp_t) to the start vertex, with sp_t depot legs.
RobotTour per_cluster_ecc(const std::vector<int>& cells, int robot,
                          const Decomposition& d, const PathCosts& pc);

// Full pipeline: cluster, then one ECC tour per cluster.
ClusterPlan cluster_area(const Decomposition& d, const DualGraph& dual,
                         const PathCosts& pc, int k);

}  // namespace mrcov
