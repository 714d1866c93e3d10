#pragma once

#include <string>
#include <vector>

#include "mrcov/bench.hpp"
#include "mrcov/planner.hpp"

namespace testutil {

using namespace mrcov;

struct RectSpec {
  int x, y, w, h;
};

inline GridMap make_map(int width, int height, const std::vector<RectSpec>& obstacles) {
  std::vector<std::uint8_t> occ(static_cast<std::size_t>(width) * height, 0);
  for (const RectSpec& r : obstacles) {
    for (int y = r.y; y < r.y + r.h; ++y) {
      for (int x = r.x; x < r.x + r.w; ++x) {
        occ[static_cast<std::size_t>(y) * width + x] = 1;
      }
    }
  }
  return GridMap(width, height, std::move(occ));
}

// 20x20 with a centered 6x6 obstacle: decomposes into left, top, bottom and
// right cells.
inline GridMap centered_obstacle_map() { return make_map(20, 20, {{7, 7, 6, 6}}); }

// 20x20 with two stacked obstacles sharing one column band: the band holds
// three parallel cells between a single split and a single merge vertex.
inline GridMap stacked_obstacle_map() {
  return make_map(20, 20, {{8, 3, 4, 4}, {8, 13, 4, 4}});
}

// Connected random multigraph with positive weights, in Reeb form.
inline ReebGraph random_graph(Rng& rng, int vertices, int extra_edges) {
  ReebGraph g;
  for (int v = 0; v < vertices; ++v) {
    g.vertices.push_back({v, {rng.uniform(0, 40), rng.uniform(0, 40)}});
  }
  auto add_edge = [&](int u, int v) {
    ReebEdge e;
    e.id = static_cast<int>(g.edges.size());
    e.u = u;
    e.v = v;
    e.w_c = rng.uniform(1, 30);
    e.w_t = rng.uniform(0, 8);
    e.c_e = 0.25 * rng.uniform(1, 16);
    g.edges.push_back(e);
  };
  for (int v = 1; v < vertices; ++v) add_edge(rng.uniform(0, v - 1), v);
  for (int i = 0; i < extra_edges; ++i) {
    int u = rng.uniform(0, vertices - 1);
    int v = rng.uniform(0, vertices - 1);
    if (u == v) v = (v + 1) % vertices;
    add_edge(u, v);
  }
  g.start_vertex = 0;
  return g;
}

}  // namespace testutil
