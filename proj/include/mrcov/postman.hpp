#pragma once

#include <string>
#include <vector>

#include "mrcov/decomposition.hpp"

namespace mrcov {

// Reeb graph plus the duplicate edges that make every degree even.
struct EulerMultigraph {
  ReebGraph base;
  std::vector<int> duplicates;  // base edge ids, sorted, each at most once
};

struct TourStep {
  int edge = -1;      // base edge id
  int from = -1;
  int to = -1;
  bool duplicate = false;  // second traversal of this edge: transit, not coverage
};

struct EulerTour {
  int start = -1;
  std::vector<TourStep> steps;
  double total_coverage_cost = 0.0;  // sum of w_c, each edge counted once
  double total_cost = 0.0;           // coverage plus w_t of duplicate traversals
  double duplicate_ce = 0.0;         // diagnostic: sum of c_e over duplicated edges
};

// Pair odd-degree vertices by exact minimum matching under c_e-weighted
// shortest-path distances and duplicate every edge on the matched paths.
EulerMultigraph eulerianize(const ReebGraph& g);

// Hierholzer closed tour; deterministic (lowest edge-instance id first).
EulerTour euler_tour(const EulerMultigraph& m, int start);

// Validity: closed at start, every edge instance exactly once, consecutive
// steps chained, every base edge covered. Returns false and fills `why`.
bool check_tour(const EulerMultigraph& m, const EulerTour& t, std::string* why = nullptr);

// All-pairs shortest paths over the Reeb graph under the travel (w_t) and
// coverage (w_c) edge weights.
struct PathCosts {
  std::vector<std::vector<double>> sp_t;
  std::vector<std::vector<double>> sp_c;
};
PathCosts path_costs(const ReebGraph& g);

}  // namespace mrcov
