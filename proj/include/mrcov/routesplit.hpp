#pragma once

#include <utility>
#include <vector>

#include "mrcov/postman.hpp"

namespace mrcov {

// Which shortest-path cost prices the depot legs (and s_max legs).
enum class SplitMode {
  CrcTravel,    // sp_t: travel-weighted legs
  FhkCoverage,  // sp_c: coverage-weighted legs (original single-cost baseline)
};

struct RobotTour {
  int robot = 0;
  std::vector<TourStep> steps;     // contiguous slice of the source tour
  double approach_cost = 0.0;      // start_vertex -> segment start
  double retreat_cost = 0.0;       // segment end -> start_vertex
  double coverage_cost = 0.0;      // sum of w_c over first-coverage steps
  double travel_cost = 0.0;        // approach + retreat + w_t of duplicate steps
  double total_cost = 0.0;
  bool idle = true;                // no coverage work assigned
  int cluster = -1;                // area-clustering only
};

struct SplitReport {
  double s_max = 0.0;
  std::vector<int> boundaries;  // k-1 split positions into the step list
  SplitMode mode = SplitMode::CrcTravel;
};

// Most expensive single-edge mission: max over tour positions of
// sp(start, v_j) + w_c(edge at j) + sp(v_j+1, start).
double compute_s_max(const EulerTour& tour, const ReebGraph& g, const PathCosts& pc,
                     SplitMode mode);

// Frederickson tour splitting: boundary j is the furthest position whose
// prefix cost stays within (j/k)(C - 2 s_max) + s_max; every robot gets its
// segment plus shortest depot legs under the mode's metric. A bounded repair
// pass afterwards restores the C/k + (1 - 1/k) s_max guarantee on degenerate
// instances where one mission dominates the tour.
std::pair<std::vector<RobotTour>, SplitReport> split_frederickson(
    const EulerTour& tour, const ReebGraph& g, const PathCosts& pc, int k,
    SplitMode mode);

// Naive route clustering: greedy segments that close once their cost reaches
// C/k; the last robot absorbs any remainder. Depot legs under sp_t.
std::vector<RobotTour> split_naive(const EulerTour& tour, const ReebGraph& g,
                                   const PathCosts& pc, int k);

}  // namespace mrcov
