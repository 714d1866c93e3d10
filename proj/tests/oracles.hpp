#pragma once

// Independent brute-force oracles. Everything here recomputes results from
// first principles (Bellman-Ford relaxation, exhaustive enumeration) and must
// stay decoupled from the implementation paths it checks.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mrcov/postman.hpp"
#include "mrcov/routesplit.hpp"

namespace oracle {

using namespace mrcov;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Grid shortest path by exhaustive relaxation until fixpoint (8-connected,
// no corner cutting), independent of the Dijkstra/A* implementations.
inline double grid_shortest(const GridMap& map, PixelPoint a, PixelPoint b) {
  const int w = map.width(), h = map.height();
  const double res = map.resolution();
  const double sqrt2 = std::sqrt(2.0);
  std::vector<double> dist(static_cast<std::size_t>(w) * h, kInf);
  dist[map.index(a.x, a.y)] = 0.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (!map.free_at(x, y) || dist[map.index(x, y)] == kInf) continue;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            int nx = x + dx, ny = y + dy;
            if (!map.in_bounds(nx, ny) || !map.free_at(nx, ny)) continue;
            if (dx != 0 && dy != 0 && (!map.free_at(x + dx, y) || !map.free_at(x, y + dy)))
              continue;
            double cost = (dx != 0 && dy != 0 ? sqrt2 : 1.0) * res;
            if (dist[map.index(x, y)] + cost < dist[map.index(nx, ny)] - 1e-12) {
              dist[map.index(nx, ny)] = dist[map.index(x, y)] + cost;
              changed = true;
            }
          }
        }
      }
    }
  }
  return dist[map.index(b.x, b.y)];
}

// All-pairs shortest path over a Reeb graph by repeated edge relaxation.
inline std::vector<std::vector<double>> graph_all_pairs(const ReebGraph& g,
                                                        double ReebEdge::*weight) {
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < n; ++s) {
      for (const auto& e : g.edges) {
        double w = e.*weight;
        if (d[s][e.u] + w < d[s][e.v] - 1e-12) {
          d[s][e.v] = d[s][e.u] + w;
          changed = true;
        }
        if (d[s][e.v] + w < d[s][e.u] - 1e-12) {
          d[s][e.u] = d[s][e.v] + w;
          changed = true;
        }
      }
    }
  }
  return d;
}

// Minimum total cost over all perfect pairings: (n-1)!! enumeration.
inline double min_pairing_cost(const std::vector<std::vector<double>>& d,
                               std::vector<int> items) {
  if (items.empty()) return 0.0;
  int first = items.front();
  double best = kInf;
  for (std::size_t j = 1; j < items.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t t = 1; t < items.size(); ++t) {
      if (t != j) rest.push_back(items[t]);
    }
    best = std::min(best, d[first][items[j]] + min_pairing_cost(d, rest));
  }
  return best;
}

// Minimum added duplication cost for Eulerianizing g: exhaustive pairing of
// odd-degree vertices under brute-force c_e shortest paths.
inline double min_duplication_cost(const ReebGraph& g) {
  std::vector<int> deg(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    deg[e.u] += 1;
    deg[e.v] += 1;
  }
  std::vector<int> odd;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] % 2 != 0) odd.push_back(static_cast<int>(v));
  }
  if (odd.empty()) return 0.0;
  auto d = graph_all_pairs(g, &ReebEdge::c_e);
  return min_pairing_cost(d, odd);
}

// Cost of one contiguous split (boundaries b, |b| = k-1, non-decreasing) under
// the same mission semantics the splitter uses; recomputed from scratch.
inline double split_max_cost(const EulerTour& tour, const ReebGraph& g,
                             const std::vector<std::vector<double>>& sp,
                             const std::vector<int>& bounds, int k) {
  const int m = static_cast<int>(tour.steps.size());
  double worst = 0.0;
  for (int j = 0; j < k; ++j) {
    int begin = j == 0 ? 0 : bounds[j - 1];
    int end = j == k - 1 ? m : bounds[j];
    if (begin >= end) continue;
    double cost = sp[tour.start][tour.steps[begin].from] +
                  sp[tour.steps[end - 1].to][tour.start];
    for (int i = begin; i < end; ++i) {
      const auto& e = g.edges[tour.steps[i].edge];
      cost += tour.steps[i].duplicate ? e.w_t : e.w_c;
    }
    worst = std::max(worst, cost);
  }
  return worst;
}

// True MinMax over every contiguous split into k parts (k = 2 or 3).
inline double best_split_cost(const EulerTour& tour, const ReebGraph& g,
                              const std::vector<std::vector<double>>& sp, int k) {
  const int m = static_cast<int>(tour.steps.size());
  double best = kInf;
  if (k == 2) {
    for (int b1 = 0; b1 <= m; ++b1) {
      best = std::min(best, split_max_cost(tour, g, sp, {b1}, 2));
    }
  } else if (k == 3) {
    for (int b1 = 0; b1 <= m; ++b1) {
      for (int b2 = b1; b2 <= m; ++b2) {
        best = std::min(best, split_max_cost(tour, g, sp, {b1, b2}, 3));
      }
    }
  }
  return best;
}

}  // namespace oracle
