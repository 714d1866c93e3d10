#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrcov/parallel.hpp"

namespace mrcov {

struct PixelPoint {
  int x = 0;
  int y = 0;
  bool operator==(const PixelPoint&) const = default;
};

// Map file could not be parsed; message carries the byte/line location.
struct MapIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Free space has more than one 4-connected component.
struct DisconnectedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Start pixel occupied or outside the covered component.
struct StartError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MapFormat { Pgm, Ascii, Auto };

// Binary occupancy raster. Immutable after construction; all queries are
// read-only and safe from concurrent threads.
class GridMap {
 public:
  GridMap(int width, int height, std::vector<std::uint8_t> occupancy,
          double resolution = 1.0);

  static GridMap load(std::istream& in, MapFormat format);
  static GridMap load_file(const std::string& path, MapFormat format = MapFormat::Auto);
  // Convenience for tests: rows separated by '\n', '#' obstacle, '.' free.
  static GridMap parse_ascii(const std::string& text);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }
  int index(int x, int y) const { return y * width_ + x; }
  PixelPoint point(int idx) const { return {idx % width_, idx / width_}; }
  bool occupied(int x, int y) const { return occ_[index(x, y)] != 0; }
  bool free_at(int x, int y) const { return occ_[index(x, y)] == 0; }
  bool free_at(PixelPoint p) const {
    return in_bounds(p.x, p.y) && free_at(p.x, p.y);
  }
  std::size_t free_count() const { return free_count_; }
  const std::vector<std::uint8_t>& raster() const { return occ_; }

  // First free pixel in row-major order (the CLI's default start).
  PixelPoint first_free() const;

 private:
  int width_;
  int height_;
  double resolution_;
  std::vector<std::uint8_t> occ_;  // nonzero = obstacle
  std::size_t free_count_ = 0;
};

// 4-connected components of free pixels as pixel-index lists, largest first
// (ties broken by smallest first pixel index).
std::vector<std::vector<int>> free_components(const GridMap& map);

// One-to-all shortest paths over free pixels, 8-connected, axis step cost
// 1*resolution and diagonal sqrt(2)*resolution. Diagonal steps are allowed
// only when both adjacent axis pixels are free (no corner cutting).
struct GeodesicField {
  PixelPoint source;
  std::vector<double> dist;   // infinity where unreachable
  std::vector<int> parent;    // predecessor pixel index, -1 at source/unreached
  bool reached(int idx) const;
};

GeodesicField geodesic_field(const GridMap& map, PixelPoint source);

// Per-source fields; the hot per-map kernel, parallel over sources.
std::vector<GeodesicField> geodesic_fields(const GridMap& map,
                                           const std::vector<PixelPoint>& sources,
                                           Exec exec);

// Point-to-point distance / path (A* with octile heuristic). Throws
// StartError if an endpoint is occupied, DisconnectedError if the endpoints
// lie in different free components.
double geodesic_distance(const GridMap& map, PixelPoint a, PixelPoint b);
std::vector<PixelPoint> geodesic_path(const GridMap& map, PixelPoint a, PixelPoint b);

// Walk parent pointers back from target; empty if target unreached.
std::vector<PixelPoint> extract_path(const GridMap& map, const GeodesicField& field,
                                     PixelPoint target);

}  // namespace mrcov
