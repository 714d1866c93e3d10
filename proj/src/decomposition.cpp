#include "mrcov/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mrcov {

std::vector<int> ReebGraph::degrees() const {
  std::vector<int> deg(vertices.size(), 0);
  for (const auto& e : edges) {
    deg[e.u] += 1;
    deg[e.v] += 1;
  }
  return deg;
}

bool ReebGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int n : adj[v]) {
      if (!seen[n]) {
        seen[n] = 1;
        ++count;
        stack.push_back(n);
      }
    }
  }
  return count == vertices.size();
}

namespace {

struct Slice {
  int y0, y1;
  int cell = -1;  // open cell index (prev column only)
  bool overlaps(const Slice& o) const { return y0 <= o.y1 && o.y0 <= y1; }
  int mid() const { return (y0 + y1) / 2; }
};

std::vector<Slice> column_slices(const std::vector<std::uint8_t>& covered, int w,
                                 int h, int x) {
  std::vector<Slice> out;
  int y = 0;
  while (y < h) {
    if (!covered[static_cast<std::size_t>(y) * w + x]) {
      ++y;
      continue;
    }
    int y0 = y;
    while (y < h && covered[static_cast<std::size_t>(y) * w + x]) ++y;
    out.push_back({y0, y - 1, -1});
  }
  return out;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Decomposition decompose(const GridMap& map, bool largest_component) {
  auto comps = free_components(map);
  if (comps.size() > 1 && !largest_component) {
    throw DisconnectedError("free space has " + std::to_string(comps.size()) +
                            " components; pass largest-component mode to plan anyway");
  }

  Decomposition d;
  const int w = map.width(), h = map.height();
  d.covered.assign(static_cast<std::size_t>(w) * h, 0);
  for (int idx : comps.front()) d.covered[idx] = 1;
  d.covered_area = static_cast<long long>(comps.front().size());
  d.excluded_free = static_cast<long long>(map.free_count()) - d.covered_area;

  auto& cells = d.cells;
  auto& verts = d.reeb.vertices;

  auto new_vertex = [&](int x, int y) {
    int id = static_cast<int>(verts.size());
    verts.push_back({id, {x, y}});
    return id;
  };
  auto open_cell = [&](int x, const Slice& s, int left_vertex) {
    int id = static_cast<int>(cells.size());
    Cell c;
    c.id = id;
    c.x_left = c.x_right = x;
    c.slices.push_back({s.y0, s.y1});
    c.left_vertex = left_vertex;
    cells.push_back(std::move(c));
    return id;
  };
  auto extend_cell = [&](int cell, int x, const Slice& s) {
    cells[cell].x_right = x;
    cells[cell].slices.push_back({s.y0, s.y1});
  };
  auto close_cell = [&](int cell, int right_vertex) {
    cells[cell].right_vertex = right_vertex;
  };

  std::vector<Slice> prev;  // slices of column x-1 with open-cell indices
  for (int x = 0; x < w; ++x) {
    std::vector<Slice> cur = column_slices(d.covered, w, h, x);

    // Union overlapping prev/cur slices into event components.
    int np = static_cast<int>(prev.size()), nc = static_cast<int>(cur.size());
    DisjointSet ds(np + nc);
    for (int i = 0; i < np; ++i) {
      for (int j = 0; j < nc; ++j) {
        if (prev[i].overlaps(cur[j])) ds.unite(i, np + j);
      }
    }
    struct Event {
      std::vector<int> ps, cs;
      int min_y = std::numeric_limits<int>::max();
    };
    std::vector<Event> events;
    std::vector<int> root_event(np + nc, -1);
    auto event_of = [&](int node, int y) -> Event& {
      int r = ds.find(node);
      if (root_event[r] < 0) {
        root_event[r] = static_cast<int>(events.size());
        events.emplace_back();
      }
      Event& ev = events[root_event[r]];
      ev.min_y = std::min(ev.min_y, y);
      return ev;
    };
    for (int i = 0; i < np; ++i) event_of(i, prev[i].y0).ps.push_back(i);
    for (int j = 0; j < nc; ++j) event_of(np + j, cur[j].y0).cs.push_back(j);
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.min_y < b.min_y; });

    for (const Event& ev : events) {
      const auto& ps = ev.ps;
      const auto& cs = ev.cs;
      if (ps.size() == 1 && cs.size() == 1) {
        extend_cell(prev[ps[0]].cell, x, cur[cs[0]]);
        cur[cs[0]].cell = prev[ps[0]].cell;
      } else if (ps.empty() && cs.size() == 1) {
        // appear: vertex at the midpoint of the first slice
        int vid = new_vertex(x, cur[cs[0]].mid());
        cur[cs[0]].cell = open_cell(x, cur[cs[0]], vid);
      } else if (ps.size() == 1 && cs.empty()) {
        // vanish: vertex at the midpoint of the last slice
        int vid = new_vertex(x - 1, prev[ps[0]].mid());
        close_cell(prev[ps[0]].cell, vid);
      } else {
        // split / merge / combined: one critical vertex per event
        int vx, vy;
        if (ps.size() == 1) {
          // split: free pixel left of the obstacle, mid-row of the first gap
          vx = x - 1;
          vy = (cur[cs[0]].y1 + 1 + cur[cs[1]].y0 - 1) / 2;
        } else if (cs.size() == 1) {
          // merge: free pixel right of the obstacle, mid-row of the first gap
          vx = x;
          vy = (prev[ps[0]].y1 + 1 + prev[ps[1]].y0 - 1) / 2;
        } else {
          // simultaneous merge+split: mid of the first overlapping pair
          vx = x;
          vy = -1;
          for (int i : ps) {
            for (int j : cs) {
              if (prev[i].overlaps(cur[j])) {
                vy = (std::max(prev[i].y0, cur[j].y0) + std::min(prev[i].y1, cur[j].y1)) / 2;
                break;
              }
            }
            if (vy >= 0) break;
          }
        }
        int vid = new_vertex(vx, vy);
        for (int i : ps) close_cell(prev[i].cell, vid);
        for (int j : cs) cur[j].cell = open_cell(x, cur[j], vid);
      }
    }
    prev = std::move(cur);
  }
  for (const Slice& s : prev) {
    int vid = new_vertex(w - 1, s.mid());
    close_cell(s.cell, vid);
  }

  // Areas, centroids, skeleton edges.
  for (Cell& c : cells) {
    long long sx = 0, sy = 0;
    for (int i = 0; i < c.width(); ++i) {
      int len = c.slices[i][1] - c.slices[i][0] + 1;
      c.area += len;
      sx += static_cast<long long>(c.x_left + i) * len;
      // sum of y over [y0, y1]
      sy += static_cast<long long>(c.slices[i][0] + c.slices[i][1]) * len / 2;
    }
    double cx = static_cast<double>(sx) / c.area;
    double cy = static_cast<double>(sy) / c.area;
    double best = std::numeric_limits<double>::max();
    for (int i = 0; i < c.width(); ++i) {
      for (int y = c.slices[i][0]; y <= c.slices[i][1]; ++y) {
        int x = c.x_left + i;
        double dd = (x - cx) * (x - cx) + (y - cy) * (y - cy);
        if (dd < best - 1e-12 ||
            (std::abs(dd - best) <= 1e-12 &&
             (y < c.center.y || (y == c.center.y && x < c.center.x)))) {
          best = dd;
          c.center = {x, y};
        }
      }
    }
    d.reeb.edges.push_back({c.id, c.left_vertex, c.right_vertex, 0.0, 0.0, 0.0});
  }
  return d;
}

void assign_weights(Decomposition& d, const GridMap& map, PixelPoint start, Exec exec) {
  if (!map.free_at(start)) {
    throw StartError("start pixel (" + std::to_string(start.x) + "," +
                     std::to_string(start.y) + ") is occupied or out of bounds");
  }
  if (!d.covered[map.index(start.x, start.y)]) {
    throw StartError("start pixel (" + std::to_string(start.x) + "," +
                     std::to_string(start.y) + ") lies outside the covered component");
  }

  std::vector<PixelPoint> sources(d.reeb.vertices.size());
  for (std::size_t i = 0; i < sources.size(); ++i) sources[i] = d.reeb.vertices[i].pos;
  auto fields = geodesic_fields(map, sources, exec);

  for (auto& e : d.reeb.edges) {
    const Cell& c = d.cells[e.id];
    e.w_c = static_cast<double>(c.area);
    e.c_e = static_cast<double>(c.width()) * c.width() / static_cast<double>(c.area);
    PixelPoint pv = d.reeb.vertices[e.v].pos;
    e.w_t = fields[e.u].dist[map.index(pv.x, pv.y)];
  }

  int start_idx = map.index(start.x, start.y);
  int best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    double dist = fields[i].dist[start_idx];
    if (dist < best_dist) {
      best_dist = dist;
      best = static_cast<int>(i);
    }
  }
  if (best < 0) {
    throw StartError("start pixel unreachable from every critical vertex");
  }
  d.reeb.start_vertex = best;
}

DualGraph build_dual(const Decomposition& d) {
  DualGraph dual;
  const auto& cells = d.cells;
  dual.centers.resize(cells.size());
  dual.anchors.resize(cells.size());
  for (const Cell& c : cells) {
    dual.centers[c.id] = c.center;
    dual.anchors[c.id] = c.left_vertex;
  }
  std::vector<std::vector<int>> incident(d.reeb.vertices.size());
  for (const Cell& c : cells) {
    incident[c.left_vertex].push_back(c.id);
    if (c.right_vertex != c.left_vertex) incident[c.right_vertex].push_back(c.id);
  }
  std::vector<std::vector<char>> seen(cells.size(), std::vector<char>(cells.size(), 0));
  for (const auto& list : incident) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        int a = std::min(list[i], list[j]), b = std::max(list[i], list[j]);
        if (seen[a][b]) continue;
        seen[a][b] = 1;
        double dx = dual.centers[a].x - dual.centers[b].x;
        double dy = dual.centers[a].y - dual.centers[b].y;
        dual.edges.push_back({a, b, std::sqrt(dx * dx + dy * dy)});
      }
    }
  }
  std::sort(dual.edges.begin(), dual.edges.end(),
            [](const DualGraph::Edge& a, const DualGraph::Edge& b) {
              return std::tie(a.a, a.b) < std::tie(b.a, b.b);
            });
  dual.adj.resize(cells.size());
  for (const auto& e : dual.edges) {
    dual.adj[e.a].push_back({e.b, e.w_d});
    dual.adj[e.b].push_back({e.a, e.w_d});
  }
  return dual;
}

}  // namespace mrcov
