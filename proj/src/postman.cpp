#include "mrcov/postman.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "mrcov/matching.hpp"

namespace mrcov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SsspResult {
  std::vector<double> dist;
  std::vector<int> parent_edge;  // edge id used to reach each vertex, -1 at source
};

// Dijkstra over the Reeb graph under c_e weights, parallel edges included.
// Adjacency is scanned in edge-id order and relaxations are strict, so the
// parent tree is deterministic.
SsspResult sssp_ce(const ReebGraph& g, const std::vector<std::vector<std::pair<int, int>>>& adj,
                   int source) {
  SsspResult r;
  r.dist.assign(g.vertices.size(), kInf);
  r.parent_edge.assign(g.vertices.size(), -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  r.dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > r.dist[v]) continue;
    for (auto [eid, other] : adj[v]) {
      double nd = d + g.edges[eid].c_e;
      if (nd < r.dist[other]) {
        r.dist[other] = nd;
        r.parent_edge[other] = eid;
        heap.push({nd, other});
      }
    }
  }
  return r;
}

}  // namespace

EulerMultigraph eulerianize(const ReebGraph& g) {
  EulerMultigraph m;
  m.base = g;

  std::vector<int> deg = g.degrees();
  std::vector<int> odd;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] % 2 != 0) odd.push_back(static_cast<int>(v));
  }
  if (odd.empty()) return m;

  std::vector<std::vector<std::pair<int, int>>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.id, e.v});
    adj[e.v].push_back({e.id, e.u});
  }

  std::vector<SsspResult> sssp;
  sssp.reserve(odd.size());
  for (int v : odd) sssp.push_back(sssp_ce(g, adj, v));

  std::vector<std::vector<double>> dist(odd.size(), std::vector<double>(odd.size(), 0.0));
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = 0; j < odd.size(); ++j) dist[i][j] = sssp[i].dist[odd[j]];
  }

  auto pairs = min_cost_pairing(dist);

  std::vector<int> times(g.edges.size(), 0);
  for (auto [i, j] : pairs) {
    // walk the parent tree of odd[i] back from odd[j]
    int cur = odd[j];
    while (cur != odd[i]) {
      int eid = sssp[i].parent_edge[cur];
      if (eid < 0) throw std::logic_error("eulerianize: broken shortest-path tree");
      times[eid] += 1;
      const auto& e = g.edges[eid];
      cur = (cur == e.u) ? e.v : e.u;
    }
  }
  for (std::size_t eid = 0; eid < times.size(); ++eid) {
    if (times[eid] > 1) {
      // cannot happen with strictly positive c_e and an optimal pairing
      throw std::logic_error("eulerianize: edge duplicated more than once");
    }
    if (times[eid] == 1) m.duplicates.push_back(static_cast<int>(eid));
  }
  return m;
}

EulerTour euler_tour(const EulerMultigraph& m, int start) {
  const ReebGraph& g = m.base;
  if (start < 0 || start >= static_cast<int>(g.vertices.size())) {
    throw std::invalid_argument("euler_tour: start vertex absent");
  }

  // Edge instances: base edges first, duplicates after, ordered by edge id.
  struct Instance {
    int edge, u, v;
  };
  std::vector<Instance> inst;
  inst.reserve(g.edges.size() + m.duplicates.size());
  for (const auto& e : g.edges) inst.push_back({e.id, e.u, e.v});
  for (int eid : m.duplicates) inst.push_back({eid, g.edges[eid].u, g.edges[eid].v});

  std::vector<std::vector<std::pair<int, int>>> adj(g.vertices.size());  // (instance, other)
  for (std::size_t i = 0; i < inst.size(); ++i) {
    adj[inst[i].u].push_back({static_cast<int>(i), inst[i].v});
    adj[inst[i].v].push_back({static_cast<int>(i), inst[i].u});
  }

  std::vector<std::size_t> next(g.vertices.size(), 0);
  std::vector<char> used(inst.size(), 0);
  std::vector<int> circuit;  // instance ids, built back to front
  std::vector<std::pair<int, int>> stack;  // (vertex, instance that led here)
  stack.push_back({start, -1});
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    while (next[v] < adj[v].size() && used[adj[v][next[v]].first]) ++next[v];
    if (next[v] == adj[v].size()) {
      stack.pop_back();
      if (via >= 0) circuit.push_back(via);
    } else {
      auto [ii, other] = adj[v][next[v]];
      used[ii] = 1;
      stack.push_back({other, ii});
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != inst.size()) {
    throw std::logic_error("euler_tour: multigraph is disconnected");
  }

  EulerTour t;
  t.start = start;
  std::vector<char> seen_edge(g.edges.size(), 0);
  int cur = start;
  for (int ii : circuit) {
    TourStep s;
    s.edge = inst[ii].edge;
    s.from = cur;
    s.to = (cur == inst[ii].u) ? inst[ii].v : inst[ii].u;
    s.duplicate = seen_edge[s.edge] != 0;
    seen_edge[s.edge] = 1;
    t.steps.push_back(s);
    cur = s.to;
  }
  for (const auto& e : g.edges) t.total_coverage_cost += e.w_c;
  t.total_cost = t.total_coverage_cost;
  for (const auto& s : t.steps) {
    if (s.duplicate) t.total_cost += g.edges[s.edge].w_t;
  }
  for (int eid : m.duplicates) t.duplicate_ce += g.edges[eid].c_e;
  return t;
}

bool check_tour(const EulerMultigraph& m, const EulerTour& t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const ReebGraph& g = m.base;
  std::size_t expected = g.edges.size() + m.duplicates.size();
  if (t.steps.size() != expected) return fail("step count != edge instances");
  if (!t.steps.empty()) {
    if (t.steps.front().from != t.start) return fail("tour does not leave start");
    if (t.steps.back().to != t.start) return fail("tour does not return to start");
  }
  std::vector<int> times(g.edges.size(), 0);
  int cur = t.start;
  for (const auto& s : t.steps) {
    if (s.from != cur) return fail("steps are not chained");
    const auto& e = g.edges[s.edge];
    if (!((s.from == e.u && s.to == e.v) || (s.from == e.v && s.to == e.u))) {
      return fail("step endpoints do not match its edge");
    }
    times[s.edge] += 1;
    cur = s.to;
  }
  std::vector<int> want(g.edges.size(), 1);
  for (int eid : m.duplicates) want[eid] += 1;
  for (std::size_t eid = 0; eid < want.size(); ++eid) {
    if (times[eid] != want[eid]) return fail("edge instance count mismatch");
  }
  return true;
}

PathCosts path_costs(const ReebGraph& g) {
  const std::size_t n = g.vertices.size();
  PathCosts pc;
  pc.sp_t.assign(n, std::vector<double>(n, kInf));
  pc.sp_c.assign(n, std::vector<double>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) {
    pc.sp_t[v][v] = 0.0;
    pc.sp_c[v][v] = 0.0;
  }
  for (const auto& e : g.edges) {
    pc.sp_t[e.u][e.v] = std::min(pc.sp_t[e.u][e.v], e.w_t);
    pc.sp_t[e.v][e.u] = pc.sp_t[e.u][e.v];
    pc.sp_c[e.u][e.v] = std::min(pc.sp_c[e.u][e.v], e.w_c);
    pc.sp_c[e.v][e.u] = pc.sp_c[e.u][e.v];
  }
  for (auto* mat : {&pc.sp_t, &pc.sp_c}) {
    auto& d = *mat;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (d[i][k] == kInf) continue;
        for (std::size_t j = 0; j < n; ++j) {
          double via = d[i][k] + d[k][j];
          if (via < d[i][j]) d[i][j] = via;
        }
      }
    }
  }
  return pc;
}

}  // namespace mrcov
