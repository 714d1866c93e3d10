#include "mrcov/gridmap.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace mrcov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2 = std::sqrt(2.0);

// Neighbor order is fixed so path extraction is deterministic.
constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};

struct PgmTokenizer {
  std::istream& in;
  std::size_t line = 1;

  // Reads the next header token, skipping whitespace and '#' comments.
  std::string next(const char* what) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
      if (c == '#') {
        while ((c = in.get()) != EOF && c != '\n') {
        }
        if (c == '\n') ++line;
        continue;
      }
      if (std::isspace(c)) {
        if (c == '\n') ++line;
        continue;
      }
      tok.push_back(static_cast<char>(c));
      while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#') {
        tok.push_back(static_cast<char>(in.get()));
      }
      return tok;
    }
    throw MapIoError("pgm: unexpected end of header while reading " +
                     std::string(what) + " (line " + std::to_string(line) + ")");
  }

  int next_int(const char* what, int lo, int hi) {
    std::string tok = next(what);
    int value = 0;
    try {
      std::size_t pos = 0;
      value = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw MapIoError("pgm: bad " + std::string(what) + " '" + tok + "' (line " +
                       std::to_string(line) + ")");
    }
    if (value < lo || value > hi) {
      throw MapIoError("pgm: " + std::string(what) + " " + std::to_string(value) +
                       " out of range [" + std::to_string(lo) + "," +
                       std::to_string(hi) + "] (line " + std::to_string(line) + ")");
    }
    return value;
  }
};

GridMap load_pgm(std::istream& in) {
  PgmTokenizer tk{in};
  std::string magic = tk.next("magic");
  if (magic != "P2" && magic != "P5") {
    throw MapIoError("pgm: unsupported magic '" + magic + "' (line 1)");
  }
  int width = tk.next_int("width", 1, 1 << 20);
  int height = tk.next_int("height", 1, 1 << 20);
  tk.next_int("maxval", 1, 255);

  std::vector<std::uint8_t> occ(static_cast<std::size_t>(width) * height);
  if (magic == "P2") {
    for (std::size_t i = 0; i < occ.size(); ++i) {
      int v = tk.next_int("pixel", 0, 255);
      occ[i] = v < 128 ? 1 : 0;
    }
  } else {
    // P5: single whitespace byte after maxval, then raw payload.
    int c = in.get();
    if (c == EOF) throw MapIoError("pgm: missing payload after header");
    std::vector<char> buf(occ.size());
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    std::size_t got = static_cast<std::size_t>(in.gcount());
    if (got != buf.size()) {
      throw MapIoError("pgm: truncated payload, expected " +
                       std::to_string(buf.size()) + " bytes, got " +
                       std::to_string(got) + " (byte offset " + std::to_string(got) +
                       ")");
    }
    for (std::size_t i = 0; i < occ.size(); ++i) {
      occ[i] = static_cast<unsigned char>(buf[i]) < 128 ? 1 : 0;
    }
  }
  return GridMap(width, height, std::move(occ));
}

GridMap load_ascii(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (rows.empty()) continue;  // leading blank lines
      break;                       // blank line terminates the grid
    }
    rows.push_back(line);
    if (rows.back().size() != rows.front().size()) {
      throw MapIoError("ascii: ragged row, line " + std::to_string(lineno) +
                       " has " + std::to_string(rows.back().size()) +
                       " cells, expected " + std::to_string(rows.front().size()));
    }
  }
  if (rows.empty()) throw MapIoError("ascii: empty map");
  int width = static_cast<int>(rows.front().size());
  int height = static_cast<int>(rows.size());
  std::vector<std::uint8_t> occ(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      char c = rows[y][x];
      if (c == '#') {
        occ[static_cast<std::size_t>(y) * width + x] = 1;
      } else if (c == '.') {
        occ[static_cast<std::size_t>(y) * width + x] = 0;
      } else {
        throw MapIoError("ascii: bad character '" + std::string(1, c) + "' at line " +
                         std::to_string(y + 1) + " column " + std::to_string(x + 1));
      }
    }
  }
  return GridMap(width, height, std::move(occ));
}

}  // namespace

GridMap::GridMap(int width, int height, std::vector<std::uint8_t> occupancy,
                 double resolution)
    : width_(width), height_(height), resolution_(resolution), occ_(std::move(occupancy)) {
  if (width_ < 1 || height_ < 1) {
    throw MapIoError("map dimensions must be at least 1x1");
  }
  if (occ_.size() != static_cast<std::size_t>(width_) * height_) {
    throw MapIoError("occupancy size does not match dimensions");
  }
  for (auto v : occ_) {
    if (v == 0) ++free_count_;
  }
  if (free_count_ == 0) {
    throw MapIoError("map has zero free pixels");
  }
}

GridMap GridMap::load(std::istream& in, MapFormat format) {
  if (format == MapFormat::Auto) {
    int c0 = in.peek();
    format = (c0 == 'P') ? MapFormat::Pgm : MapFormat::Ascii;
  }
  return format == MapFormat::Pgm ? load_pgm(in) : load_ascii(in);
}

GridMap GridMap::load_file(const std::string& path, MapFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MapIoError("cannot open map file: " + path);
  return load(in, format);
}

GridMap GridMap::parse_ascii(const std::string& text) {
  std::istringstream in(text);
  return load_ascii(in);
}

PixelPoint GridMap::first_free() const {
  for (int i = 0; i < width_ * height_; ++i) {
    if (occ_[i] == 0) return point(i);
  }
  return {0, 0};  // unreachable: constructor requires a free pixel
}

std::vector<std::vector<int>> free_components(const GridMap& map) {
  const int w = map.width(), h = map.height();
  std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
  std::vector<std::vector<int>> comps;
  std::vector<int> stack;
  for (int i = 0; i < w * h; ++i) {
    PixelPoint p = map.point(i);
    if (!map.free_at(p.x, p.y) || label[i] >= 0) continue;
    int id = static_cast<int>(comps.size());
    comps.emplace_back();
    stack.assign(1, i);
    label[i] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      comps[id].push_back(cur);
      PixelPoint c = map.point(cur);
      for (int d = 0; d < 4; ++d) {  // axis neighbors only: 4-connectivity
        int nx = c.x + kDx[d], ny = c.y + kDy[d];
        if (!map.in_bounds(nx, ny) || !map.free_at(nx, ny)) continue;
        int ni = map.index(nx, ny);
        if (label[ni] < 0) {
          label[ni] = id;
          stack.push_back(ni);
        }
      }
    }
    std::sort(comps[id].begin(), comps[id].end());
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return comps;
}

bool GeodesicField::reached(int idx) const { return dist[idx] < kInf; }

namespace {

inline bool diagonal_ok(const GridMap& map, int x, int y, int nx, int ny) {
  // Both adjacent axis pixels must be free: no squeezing between corners.
  return map.free_at(nx, y) && map.free_at(x, ny);
}

void run_dijkstra(const GridMap& map, PixelPoint source, std::vector<double>& dist,
                  std::vector<int>& parent, int stop_at) {
  const int w = map.width(), h = map.height();
  const double res = map.resolution();
  dist.assign(static_cast<std::size_t>(w) * h, kInf);
  parent.assign(dist.size(), -1);
  if (!map.free_at(source)) {
    throw StartError("geodesic source (" + std::to_string(source.x) + "," +
                     std::to_string(source.y) + ") is occupied or out of bounds");
  }
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  int s = map.index(source.x, source.y);
  dist[s] = 0.0;
  heap.push({0.0, s});
  while (!heap.empty()) {
    auto [d, cur] = heap.top();
    heap.pop();
    if (d > dist[cur]) continue;
    if (cur == stop_at) return;
    PixelPoint c = map.point(cur);
    for (int k = 0; k < 8; ++k) {
      int nx = c.x + kDx[k], ny = c.y + kDy[k];
      if (!map.in_bounds(nx, ny) || !map.free_at(nx, ny)) continue;
      bool diag = kDx[k] != 0 && kDy[k] != 0;
      if (diag && !diagonal_ok(map, c.x, c.y, nx, ny)) continue;
      double nd = d + (diag ? kSqrt2 : 1.0) * res;
      int ni = map.index(nx, ny);
      if (nd < dist[ni]) {
        dist[ni] = nd;
        parent[ni] = cur;
        heap.push({nd, ni});
      }
    }
  }
}

}  // namespace

GeodesicField geodesic_field(const GridMap& map, PixelPoint source) {
  GeodesicField f;
  f.source = source;
  run_dijkstra(map, source, f.dist, f.parent, -1);
  return f;
}

std::vector<GeodesicField> geodesic_fields(const GridMap& map,
                                           const std::vector<PixelPoint>& sources,
                                           Exec exec) {
  std::vector<GeodesicField> fields(sources.size());
  for_each_index(exec, static_cast<int>(sources.size()),
                 [&](int i) { fields[i] = geodesic_field(map, sources[i]); });
  return fields;
}

namespace {

struct AStarResult {
  double dist;
  std::vector<int> parent;
};

AStarResult astar(const GridMap& map, PixelPoint a, PixelPoint b) {
  if (!map.free_at(a)) {
    throw StartError("path endpoint (" + std::to_string(a.x) + "," +
                     std::to_string(a.y) + ") is occupied or out of bounds");
  }
  if (!map.free_at(b)) {
    throw StartError("path endpoint (" + std::to_string(b.x) + "," +
                     std::to_string(b.y) + ") is occupied or out of bounds");
  }
  const int w = map.width(), h = map.height();
  const double res = map.resolution();
  auto heuristic = [&](int x, int y) {
    double dx = std::abs(x - b.x), dy = std::abs(y - b.y);
    double m = std::min(dx, dy);
    return (dx + dy - 2.0 * m + kSqrt2 * m) * res;
  };
  std::vector<double> dist(static_cast<std::size_t>(w) * h, kInf);
  std::vector<int> parent(dist.size(), -1);
  using Item = std::pair<double, int>;  // (f, pixel)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  int s = map.index(a.x, a.y), t = map.index(b.x, b.y);
  dist[s] = 0.0;
  heap.push({heuristic(a.x, a.y), s});
  while (!heap.empty()) {
    auto [f, cur] = heap.top();
    heap.pop();
    PixelPoint c = map.point(cur);
    if (f > dist[cur] + heuristic(c.x, c.y) + 1e-12) continue;
    if (cur == t) return {dist[t], std::move(parent)};
    for (int k = 0; k < 8; ++k) {
      int nx = c.x + kDx[k], ny = c.y + kDy[k];
      if (!map.in_bounds(nx, ny) || !map.free_at(nx, ny)) continue;
      bool diag = kDx[k] != 0 && kDy[k] != 0;
      if (diag && !diagonal_ok(map, c.x, c.y, nx, ny)) continue;
      double nd = dist[cur] + (diag ? kSqrt2 : 1.0) * res;
      int ni = map.index(nx, ny);
      if (nd < dist[ni]) {
        dist[ni] = nd;
        parent[ni] = cur;
        heap.push({nd + heuristic(nx, ny), ni});
      }
    }
  }
  throw DisconnectedError("no path between (" + std::to_string(a.x) + "," +
                          std::to_string(a.y) + ") and (" + std::to_string(b.x) +
                          "," + std::to_string(b.y) + "): different free components");
}

}  // namespace

double geodesic_distance(const GridMap& map, PixelPoint a, PixelPoint b) {
  if (a == b) {
    if (!map.free_at(a)) throw StartError("endpoint occupied");
    return 0.0;
  }
  return astar(map, a, b).dist;
}

std::vector<PixelPoint> geodesic_path(const GridMap& map, PixelPoint a, PixelPoint b) {
  if (a == b) {
    if (!map.free_at(a)) throw StartError("endpoint occupied");
    return {a};
  }
  AStarResult r = astar(map, a, b);
  std::vector<PixelPoint> path;
  int cur = map.index(b.x, b.y);
  while (cur != -1) {
    path.push_back(map.point(cur));
    cur = r.parent[cur];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<PixelPoint> extract_path(const GridMap& map, const GeodesicField& field,
                                     PixelPoint target) {
  int t = map.index(target.x, target.y);
  if (!field.reached(t)) return {};
  std::vector<PixelPoint> path;
  int cur = t;
  while (cur != -1) {
    path.push_back(map.point(cur));
    cur = field.parent[cur];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace mrcov
