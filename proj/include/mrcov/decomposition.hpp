#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mrcov/gridmap.hpp"

namespace mrcov {

// A boustrophedon cell: one contiguous free row-interval per column over a
// contiguous column range, where consecutive slices overlap in >= 1 row.
struct Cell {
  int id = -1;
  int x_left = 0;
  int x_right = -1;
  std::vector<std::array<int, 2>> slices;  // per column {y_top, y_bottom}
  long long area = 0;
  PixelPoint center;       // centroid snapped to the nearest cell pixel
  int left_vertex = -1;    // critical vertex where the cell opened
  int right_vertex = -1;   // critical vertex where the cell closed

  int width() const { return x_right - x_left + 1; }
  const std::array<int, 2>& slice_at(int x) const { return slices[x - x_left]; }
};

struct ReebVertex {
  int id = -1;
  PixelPoint pos;
};

// One edge per cell; u is the left (opening) vertex, v the right one.
struct ReebEdge {
  int id = -1;
  int u = -1;
  int v = -1;
  double w_c = 0.0;  // coverage weight: cell area
  double w_t = 0.0;  // traversal weight: geodesic distance between endpoints
  double c_e = 0.0;  // duplication cost: width^2 / area
};

struct ReebGraph {
  std::vector<ReebVertex> vertices;
  std::vector<ReebEdge> edges;
  int start_vertex = -1;

  std::vector<int> degrees() const;
  bool connected() const;
};

struct Decomposition {
  std::vector<Cell> cells;
  ReebGraph reeb;                        // skeleton until assign_weights runs
  std::vector<std::uint8_t> covered;     // 1 = free pixel of the covered component
  long long covered_area = 0;            // pixels in the covered component
  long long excluded_free = 0;           // free pixels outside it
};

// Sweep columns left to right and carve the free space of the (single or
// largest) 4-connected component into cells, emitting critical vertices at
// connectivity changes. Throws DisconnectedError when the free space has
// several components and largest_component is false.
Decomposition decompose(const GridMap& map, bool largest_component = false);

// Fill w_c/w_t/c_e on every edge and pick start_vertex = Reeb vertex nearest
// (geodesic) to start, ties to the lowest id.
void assign_weights(Decomposition& d, const GridMap& map, PixelPoint start,
                    Exec exec = Exec::Serial);

struct DualGraph {
  struct Edge {
    int a = -1;
    int b = -1;
    double w_d = 0.0;  // Euclidean distance between cell centers
  };
  std::vector<PixelPoint> centers;                        // per cell
  std::vector<int> anchors;                               // leftmost critical vertex per cell
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, double>>> adj;   // per cell: (neighbor cell, w_d)

  std::size_t size() const { return centers.size(); }
};

// Cells become vertices; cells sharing a critical point become adjacent.
DualGraph build_dual(const Decomposition& d);

}  // namespace mrcov
