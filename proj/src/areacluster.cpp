#include "mrcov/areacluster.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mrcov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct GreedyResult {
  std::vector<std::vector<int>> clusters;
  std::vector<double> limits;
  std::vector<int> seeds;
};

double travel_to_cell(const ReebGraph& g, const DualGraph& dual, const PathCosts& pc,
                      int cell) {
  return pc.sp_t[g.start_vertex][dual.anchors[cell]];
}

GreedyResult greedy_clusters(const Decomposition& d, const DualGraph& dual,
                             const PathCosts& pc, int k) {
  if (k < 1) throw std::invalid_argument("cluster_cells: k must be >= 1");
  const ReebGraph& g = d.reeb;
  const int n = static_cast<int>(d.cells.size());

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const PixelPoint& pa = dual.centers[a];
    const PixelPoint& pb = dual.centers[b];
    if (pa.y != pb.y) return pa.y < pb.y;
    return pa.x < pb.x;
  });

  GreedyResult res;
  std::vector<int> assigned(n, -1);
  double remaining = 0.0;  // S
  for (const auto& e : g.edges) remaining += e.w_c;

  int next_seed = 0;
  while (static_cast<int>(res.clusters.size()) < k && remaining > 0.0) {
    while (next_seed < n && assigned[order[next_seed]] >= 0) ++next_seed;
    if (next_seed == n) break;
    int seed = order[next_seed];
    int h = static_cast<int>(res.clusters.size());
    double seed_travel = travel_to_cell(g, dual, pc, seed);
    double limit = seed_travel + remaining / (k - h);

    std::vector<int> cluster;
    double area_sum = 0.0;
    double travel = kInf;
    std::vector<char> tried(n, 0);
    std::deque<int> queue;
    queue.push_back(seed);
    tried[seed] = 1;
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      double new_area = area_sum + g.edges[c].w_c;
      double new_travel = std::min(travel, travel_to_cell(g, dual, pc, c));
      bool is_seed = cluster.empty();
      if (!is_seed && new_area + new_travel > limit + 1e-9) continue;  // blocked
      cluster.push_back(c);
      assigned[c] = h;
      area_sum = new_area;
      travel = new_travel;
      auto nbrs = dual.adj[c];
      std::sort(nbrs.begin(), nbrs.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
      });
      for (const auto& [nb, wd] : nbrs) {
        if (assigned[nb] < 0 && !tried[nb]) {
          tried[nb] = 1;
          queue.push_back(nb);
        }
      }
    }
    res.clusters.push_back(std::move(cluster));
    res.limits.push_back(limit);
    res.seeds.push_back(seed);
    remaining -= area_sum + travel;
  }

  // Complete coverage is non-negotiable: any cell still unassigned joins the
  // nearest (w_d) adjacent cluster, closest pairs first.
  int left = 0;
  for (int c = 0; c < n; ++c) {
    if (assigned[c] < 0) ++left;
  }
  while (left > 0) {
    int best_cell = -1, best_nb = -1;
    double best_wd = kInf;
    for (int c = 0; c < n; ++c) {
      if (assigned[c] >= 0) continue;
      for (const auto& [nb, wd] : dual.adj[c]) {
        if (assigned[nb] < 0) continue;
        if (wd < best_wd - 1e-12 ||
            (wd < best_wd + 1e-12 &&
             (c < best_cell || (c == best_cell && nb < best_nb)))) {
          best_wd = wd;
          best_cell = c;
          best_nb = nb;
        }
      }
    }
    if (best_cell < 0) {
      throw std::logic_error("cluster_cells: leftover cell with no clustered neighbor");
    }
    int h = assigned[best_nb];
    assigned[best_cell] = h;
    res.clusters[h].push_back(best_cell);
    --left;
  }
  return res;
}

}  // namespace

double cluster_size(const std::vector<int>& cells, const ReebGraph& g,
                    const DualGraph& dual, const PathCosts& pc) {
  if (cells.empty()) throw std::invalid_argument("cluster_size: empty cell set");
  double area = 0.0;
  double travel = kInf;
  for (int c : cells) {
    area += g.edges[c].w_c;
    travel = std::min(travel, travel_to_cell(g, dual, pc, c));
  }
  return area + travel;
}

std::vector<std::vector<int>> cluster_cells(const Decomposition& d, const DualGraph& dual,
                                            const PathCosts& pc, int k) {
  return greedy_clusters(d, dual, pc, k).clusters;
}

std::vector<double> compute_limits(const Decomposition& d, const DualGraph& dual,
                                   const PathCosts& pc, int k) {
  return greedy_clusters(d, dual, pc, k).limits;
}

RobotTour per_cluster_ecc(const std::vector<int>& cells, int robot,
                          const Decomposition& d, const PathCosts& pc) {
  RobotTour r;
  r.robot = robot;
  r.cluster = robot;
  if (cells.empty()) return r;

  const ReebGraph& g = d.reeb;
  std::vector<int> members = cells;
  std::sort(members.begin(), members.end());

  // Induced subgraph with local ids; edge order follows global cell ids so
  // the tour is deterministic.
  ReebGraph sub;
  std::vector<int> global_vertex;
  std::vector<int> local_of(g.vertices.size(), -1);
  auto local_vertex = [&](int v) {
    if (local_of[v] < 0) {
      local_of[v] = static_cast<int>(global_vertex.size());
      global_vertex.push_back(v);
      sub.vertices.push_back({local_of[v], g.vertices[v].pos});
    }
    return local_of[v];
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ReebEdge& e = g.edges[members[i]];
    ReebEdge le = e;
    le.id = static_cast<int>(i);
    le.u = local_vertex(e.u);
    le.v = local_vertex(e.v);
    sub.edges.push_back(le);
  }

  int entry_local = 0;
  double best = kInf;
  for (std::size_t i = 0; i < global_vertex.size(); ++i) {
    double dist = pc.sp_t[g.start_vertex][global_vertex[i]];
    int gv = global_vertex[i];
    if (dist < best - 1e-12 ||
        (dist < best + 1e-12 && gv < global_vertex[entry_local])) {
      best = dist;
      entry_local = static_cast<int>(i);
    }
  }

  EulerMultigraph multi = eulerianize(sub);
  EulerTour tour = euler_tour(multi, entry_local);

  for (const auto& s : tour.steps) {
    TourStep gs;
    gs.edge = members[s.edge];
    gs.from = global_vertex[s.from];
    gs.to = global_vertex[s.to];
    gs.duplicate = s.duplicate;
    r.steps.push_back(gs);
    if (gs.duplicate) {
      r.travel_cost += g.edges[gs.edge].w_t;
    } else {
      r.coverage_cost += g.edges[gs.edge].w_c;
    }
  }
  r.approach_cost = best;
  r.retreat_cost = best;
  r.travel_cost += r.approach_cost + r.retreat_cost;
  r.total_cost = r.coverage_cost + r.travel_cost;
  r.idle = r.coverage_cost == 0.0;
  return r;
}

ClusterPlan cluster_area(const Decomposition& d, const DualGraph& dual,
                         const PathCosts& pc, int k) {
  GreedyResult gr = greedy_clusters(d, dual, pc, k);
  ClusterPlan plan;
  plan.clusters = std::move(gr.clusters);
  plan.limits = std::move(gr.limits);
  plan.seeds = std::move(gr.seeds);
  for (std::size_t h = 0; h < plan.clusters.size(); ++h) {
    plan.tours.push_back(
        per_cluster_ecc(plan.clusters[h], static_cast<int>(h), d, pc));
  }
  return plan;
}

}  // namespace mrcov
