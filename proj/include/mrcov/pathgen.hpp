#pragma once

#include <vector>

#include "mrcov/routesplit.hpp"

namespace mrcov {

enum class WaypointKind { Cover, Transit };

struct Waypoint {
  PixelPoint pos;
  WaypointKind kind = WaypointKind::Cover;
};

struct FootprintSpec {
  double radius = 0.5;  // Chebyshev half-width of the covered swath, pixels
};

// Serpentine sweep of one cell: full-column stripes spaced 2*radius (plus a
// clamped final stripe), connected by within-cell walks so consecutive
// waypoints stay 8-adjacent. Supplemental stripes are appended if the spacing
// would leave a pixel of an irregular cell outside every swath.
std::vector<Waypoint> lawnmower(const Cell& cell, const FootprintSpec& footprint,
                                bool enter_left);

struct RobotPath {
  std::vector<Waypoint> waypoints;
  double cover_length = 0.0;
  double transit_length = 0.0;
};

// Executable waypoint path for one robot tour: transit from the start pixel
// to the first cell, lawnmower per covered cell (entry side matching the
// tour direction), geodesic transit across duplicate steps, transit home.
// Robots without coverage work stay at the depot (empty path).
RobotPath build_robot_path(const RobotTour& tour, const Decomposition& d,
                           const GridMap& map, PixelPoint start,
                           const FootprintSpec& footprint);

std::vector<RobotPath> build_paths(const std::vector<RobotTour>& tours,
                                   const Decomposition& d, const GridMap& map,
                                   PixelPoint start, const FootprintSpec& footprint);

struct CoverageReport {
  long long covered = 0;
  long long missed = 0;
  long long overlap = 0;  // free pixels inside >= 2 robots' swaths
};

// Rasterize every robot's cover swaths and compare against the free pixels.
CoverageReport verify_coverage(const std::vector<RobotPath>& paths, const GridMap& map,
                               const FootprintSpec& footprint);

}  // namespace mrcov
