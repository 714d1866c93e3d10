#include "mrcov/pathgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mrcov {

namespace {

const double kSqrt2 = std::sqrt(2.0);

int clamp_row(int y, const std::array<int, 2>& slice) {
  return std::max(slice[0], std::min(slice[1], y));
}

// Vertical walk within the current column, then one axis step into the next
// column; repeats until reaching column xb, then walks to row yb. All pixels
// stay inside the cell, so every move is between free pixels.
void walk_within_cell(const Cell& cell, PixelPoint from, int xb, int yb,
                      std::vector<Waypoint>& out) {
  PixelPoint cur = from;
  while (cur.x != xb) {
    int dir = xb > cur.x ? 1 : -1;
    const auto& next_slice = cell.slice_at(cur.x + dir);
    int yo = clamp_row(cur.y, next_slice);
    // stay in the shared rows of both columns before crossing
    const auto& here = cell.slice_at(cur.x);
    yo = clamp_row(yo, here);
    while (cur.y != yo) {
      cur.y += yo > cur.y ? 1 : -1;
      out.push_back({cur, WaypointKind::Cover});
    }
    cur.x += dir;
    out.push_back({cur, WaypointKind::Cover});
  }
  while (cur.y != yb) {
    cur.y += yb > cur.y ? 1 : -1;
    out.push_back({cur, WaypointKind::Cover});
  }
}

void emit_stripe(const Cell& cell, int x, bool downward, std::vector<Waypoint>& out) {
  const auto& s = cell.slice_at(x);
  if (out.empty()) {
    out.push_back({{x, downward ? s[0] : s[1]}, WaypointKind::Cover});
  } else {
    walk_within_cell(cell, out.back().pos, x, downward ? s[0] : s[1], out);
    if (out.empty() || !(out.back().pos == PixelPoint{x, downward ? s[0] : s[1]})) {
      out.push_back({{x, downward ? s[0] : s[1]}, WaypointKind::Cover});
    }
  }
  PixelPoint cur = out.back().pos;
  int target = downward ? s[1] : s[0];
  while (cur.y != target) {
    cur.y += downward ? 1 : -1;
    out.push_back({cur, WaypointKind::Cover});
  }
}

}  // namespace

std::vector<Waypoint> lawnmower(const Cell& cell, const FootprintSpec& footprint,
                                bool enter_left) {
  if (footprint.radius <= 0) throw std::invalid_argument("footprint radius must be > 0");
  const int step = std::max(1, static_cast<int>(std::floor(2.0 * footprint.radius + 1e-9)));
  const int reach = static_cast<int>(std::floor(footprint.radius + 1e-9));

  std::vector<int> stripes;
  if (enter_left) {
    for (int x = cell.x_left; x <= cell.x_right; x += step) stripes.push_back(x);
    if (stripes.back() != cell.x_right) stripes.push_back(cell.x_right);
  } else {
    for (int x = cell.x_right; x >= cell.x_left; x -= step) stripes.push_back(x);
    if (stripes.back() != cell.x_left) stripes.push_back(cell.x_left);
  }

  if (step > 1) {
    // spacing can miss pixels of irregular slices; add stripes where needed
    std::vector<char> is_stripe(cell.width(), 0);
    for (int x : stripes) is_stripe[x - cell.x_left] = 1;
    auto column_covered = [&](int x) {
      const auto& s = cell.slice_at(x);
      for (int y = s[0]; y <= s[1]; ++y) {
        bool hit = false;
        for (int sx = std::max(cell.x_left, x - reach);
             sx <= std::min(cell.x_right, x + reach) && !hit; ++sx) {
          if (!is_stripe[sx - cell.x_left]) continue;
          const auto& ss = cell.slice_at(sx);
          if (y >= ss[0] - reach && y <= ss[1] + reach) hit = true;
        }
        if (!hit) return false;
      }
      return true;
    };
    for (int x = cell.x_left; x <= cell.x_right; ++x) {
      if (!is_stripe[x - cell.x_left] && !column_covered(x)) {
        stripes.push_back(x);
        is_stripe[x - cell.x_left] = 1;
      }
    }
  }

  std::vector<Waypoint> out;
  bool downward = true;
  for (int x : stripes) {
    emit_stripe(cell, x, downward, out);
    downward = !downward;
  }
  return out;
}

namespace {

void append_point(RobotPath& path, PixelPoint p, WaypointKind kind, double resolution) {
  if (!path.waypoints.empty()) {
    PixelPoint prev = path.waypoints.back().pos;
    if (prev == p) {
      // keep one waypoint per pose; a cover visit outranks a transit one
      if (kind == WaypointKind::Cover) path.waypoints.back().kind = kind;
      return;
    }
    int dx = std::abs(p.x - prev.x), dy = std::abs(p.y - prev.y);
    double len = (dx == 1 && dy == 1) ? kSqrt2 * resolution : resolution;
    if (kind == WaypointKind::Cover) {
      path.cover_length += len;
    } else {
      path.transit_length += len;
    }
  }
  path.waypoints.push_back({p, kind});
}

void append_transit(RobotPath& path, const GridMap& map, PixelPoint from, PixelPoint to) {
  for (const PixelPoint& p : geodesic_path(map, from, to)) {
    append_point(path, p, WaypointKind::Transit, map.resolution());
  }
}

}  // namespace

RobotPath build_robot_path(const RobotTour& tour, const Decomposition& d,
                           const GridMap& map, PixelPoint start,
                           const FootprintSpec& footprint) {
  RobotPath path;
  if (tour.coverage_cost <= 0.0) return path;  // idle: stay at the depot

  PixelPoint pos = start;
  append_point(path, start, WaypointKind::Transit, map.resolution());
  for (const TourStep& s : tour.steps) {
    const ReebEdge& e = d.reeb.edges[s.edge];
    if (s.duplicate) {
      PixelPoint target = d.reeb.vertices[s.to].pos;
      append_transit(path, map, pos, target);
      pos = target;
      continue;
    }
    bool enter_left = s.from == e.u;
    std::vector<Waypoint> sweep = lawnmower(d.cells[s.edge], footprint, enter_left);
    append_transit(path, map, pos, sweep.front().pos);
    for (const Waypoint& w : sweep) {
      append_point(path, w.pos, w.kind, map.resolution());
    }
    pos = sweep.back().pos;
  }
  append_transit(path, map, pos, start);
  return path;
}

std::vector<RobotPath> build_paths(const std::vector<RobotTour>& tours,
                                   const Decomposition& d, const GridMap& map,
                                   PixelPoint start, const FootprintSpec& footprint) {
  std::vector<RobotPath> paths;
  paths.reserve(tours.size());
  for (const RobotTour& t : tours) {
    paths.push_back(build_robot_path(t, d, map, start, footprint));
  }
  return paths;
}

CoverageReport verify_coverage(const std::vector<RobotPath>& paths, const GridMap& map,
                               const FootprintSpec& footprint) {
  const int w = map.width(), h = map.height();
  const int reach = static_cast<int>(std::floor(footprint.radius + 1e-9));
  std::vector<std::uint8_t> hits(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::uint8_t> mine(hits.size());
  for (const RobotPath& path : paths) {
    std::fill(mine.begin(), mine.end(), 0);
    for (const Waypoint& wp : path.waypoints) {
      if (wp.kind != WaypointKind::Cover) continue;
      for (int dy = -reach; dy <= reach; ++dy) {
        for (int dx = -reach; dx <= reach; ++dx) {
          int x = wp.pos.x + dx, y = wp.pos.y + dy;
          if (map.in_bounds(x, y) && map.free_at(x, y)) mine[map.index(x, y)] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
      if (mine[i] && hits[i] < 255) hits[i] += 1;
    }
  }
  CoverageReport rep;
  for (int i = 0; i < w * h; ++i) {
    PixelPoint p = map.point(i);
    if (!map.free_at(p.x, p.y)) continue;
    if (hits[i] == 0) {
      rep.missed += 1;
    } else {
      rep.covered += 1;
      if (hits[i] >= 2) rep.overlap += 1;
    }
  }
  return rep;
}

}  // namespace mrcov
