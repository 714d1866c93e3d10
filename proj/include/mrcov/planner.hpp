#pragma once

#include <string>
#include <vector>

#include "mrcov/areacluster.hpp"
#include "mrcov/pathgen.hpp"

namespace mrcov {

enum class Algorithm { Crc, Cac, Nrc, Fhk };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

// Everything that depends only on (map, start): decomposition, dual graph,
// graph metrics and the single-robot ECC tour. Built once, shared by every
// algorithm and team size.
struct Workspace {
  GridMap map;
  PixelPoint start;
  Decomposition decomp;
  DualGraph dual;
  PathCosts costs;
  EulerMultigraph multi;
  EulerTour tour;  // closed ECC tour from start_vertex
};

Workspace build_workspace(GridMap map, PixelPoint start, bool largest_component = false,
                          Exec exec = Exec::Serial);

struct CoveragePlan {
  Algorithm algorithm = Algorithm::Crc;
  int k = 1;
  PixelPoint start;
  int start_vertex = -1;
  double single_tour_cost = 0.0;           // reference: ECC tour total cost
  double s_max = 0.0;                      // tour-splitting algorithms
  std::vector<int> boundaries;             // tour-splitting algorithms
  std::vector<std::vector<int>> clusters;  // area clustering
  std::vector<double> cluster_limits;      // area clustering
  std::vector<RobotTour> robots;           // exactly k entries
  std::vector<RobotPath> paths;            // exactly k entries
};

CoveragePlan plan_coverage(const Workspace& ws, Algorithm algorithm, int k,
                           const FootprintSpec& footprint = {});

}  // namespace mrcov
