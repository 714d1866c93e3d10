#include "mrcov/matching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>

namespace mrcov {

namespace {

std::vector<std::pair<int, int>> pairing_dp(const std::vector<std::vector<double>>& d) {
  const int n = static_cast<int>(d.size());
  const std::uint32_t full = (1u << n) - 1;
  std::vector<double> f(full + 1, std::numeric_limits<double>::infinity());
  std::vector<std::int8_t> choice(full + 1, -1);
  f[0] = 0.0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    int i = __builtin_ctz(mask);
    for (int j = i + 1; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      std::uint32_t rest = mask & ~(1u << i) & ~(1u << j);
      double v = f[rest] + d[i][j];
      if (v < f[mask]) {
        f[mask] = v;
        choice[mask] = static_cast<std::int8_t>(j);
      }
    }
  }
  std::vector<std::pair<int, int>> pairs;
  std::uint32_t mask = full;
  while (mask) {
    int i = __builtin_ctz(mask);
    int j = choice[mask];
    pairs.emplace_back(i, j);
    mask &= ~(1u << i) & ~(1u << j);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

// Primal-dual blossom algorithm for maximum weight matching on a dense
// graph (O(n^3)); 1-based vertices, nodes above n are shrunken blossoms.
class Blossom {
 public:
  explicit Blossom(int n)
      : n_(n),
        cap_(2 * n + 1),
        edge_(cap_, std::vector<Edge>(cap_)),
        lab_(cap_, 0),
        match_(cap_, 0),
        slack_(cap_, 0),
        st_(cap_, 0),
        pa_(cap_, 0),
        side_(cap_, -1),
        vis_(cap_, 0),
        flower_(cap_),
        flower_from_(cap_, std::vector<int>(n + 1, 0)) {
    for (int u = 0; u < cap_; ++u) {
      for (int v = 0; v < cap_; ++v) edge_[u][v] = {u, v, 0};
    }
  }

  void set_weight(int u, int v, long long w) {
    edge_[u][v].w = w;
    edge_[v][u].w = w;
  }

  // Runs the primal-dual loop to a maximum weight matching; match(u) is 0
  // for exposed vertices.
  void solve() {
    n_x_ = n_;
    long long w_max = 0;
    for (int u = 1; u <= n_; ++u) {
      st_[u] = u;
      flower_[u].clear();
      for (int v = 1; v <= n_; ++v) {
        flower_from_[u][v] = (u == v ? u : 0);
        w_max = std::max(w_max, edge_[u][v].w);
      }
    }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (grow()) {
    }
  }

  int match(int u) const { return match_[u]; }

 private:
  struct Edge {
    int u, v;
    long long w;
  };

  static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

  int n_, cap_, n_x_ = 0, timer_ = 0;
  std::vector<std::vector<Edge>> edge_;
  std::vector<long long> lab_;
  std::vector<int> match_, slack_, st_, pa_, side_, vis_;
  std::vector<std::vector<int>> flower_;
  std::vector<std::vector<int>> flower_from_;
  std::deque<int> q_;

  long long delta(const Edge& e) const { return lab_[e.u] + lab_[e.v] - 2 * e.w; }

  void update_slack(int u, int x) {
    if (!slack_[x] || delta(edge_[u][x]) < delta(edge_[slack_[x]][x])) slack_[x] = u;
  }
  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u) {
      if (edge_[u][x].w > 0 && st_[u] != x && side_[st_[u]] == 0) update_slack(u, x);
    }
  }
  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int i : flower_[x]) q_push(i);
    }
  }
  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_) {
      for (int i : flower_[x]) set_st(i, b);
    }
  }
  int get_pr(int b, int xr) {
    int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                              flower_[b].begin());
    if (pr % 2 == 1) {
      std::reverse(flower_[b].begin() + 1, flower_[b].end());
      return static_cast<int>(flower_[b].size()) - pr;
    }
    return pr;
  }
  void set_match(int u, int v) {
    match_[u] = edge_[u][v].v;
    if (u > n_) {
      const Edge& e = edge_[u][v];
      int xr = flower_from_[u][e.u];
      int pr = get_pr(u, xr);
      for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
      set_match(xr, v);
      std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }
  }
  void augment(int u, int v) {
    while (true) {
      int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }
  int get_lca(int u, int v) {
    for (++timer_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == timer_) return u;
      vis_[u] = timer_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }
  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    side_[b] = 0;
    match_[b] = match_[lca];
    flower_[b].clear();
    flower_[b].push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      y = st_[match_[x]];
      flower_[b].push_back(y);
      q_push(y);
    }
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      y = st_[match_[x]];
      flower_[b].push_back(y);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) edge_[b][x].w = edge_[x][b].w = 0;
    for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
    for (int xs : flower_[b]) {
      for (int x = 1; x <= n_x_; ++x) {
        if (edge_[b][x].w == 0 || delta(edge_[xs][x]) < delta(edge_[b][x])) {
          edge_[b][x] = edge_[xs][x];
          edge_[x][b] = edge_[x][xs];
        }
      }
      for (int x = 1; x <= n_; ++x) {
        if (flower_from_[xs][x]) flower_from_[b][x] = xs;
      }
    }
    set_slack(b);
  }
  void expand_blossom(int b) {
    for (int i : flower_[b]) set_st(i, i);
    int xr = flower_from_[b][edge_[b][pa_[b]].u];
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = flower_[b][i], xns = flower_[b][i + 1];
      pa_[xs] = edge_[xns][xs].u;
      side_[xs] = 1;
      side_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    side_[xr] = 1;
    pa_[xr] = pa_[b];
    for (std::size_t i = pr + 1; i < flower_[b].size(); ++i) {
      side_[flower_[b][i]] = -1;
      set_slack(flower_[b][i]);
    }
    st_[b] = 0;
  }
  bool on_found_edge(const Edge& e) {
    int u = st_[e.u], v = st_[e.v];
    if (side_[v] == -1) {
      pa_[v] = e.u;
      side_[v] = 1;
      int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      side_[nu] = 0;
      q_push(nu);
    } else if (side_[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }
  bool grow() {
    std::fill(side_.begin(), side_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        side_[x] = 0;
        q_push(x);
      }
    }
    if (q_.empty()) return false;
    while (true) {
      while (!q_.empty()) {
        int u = q_.front();
        q_.pop_front();
        if (side_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v) {
          if (edge_[u][v].w > 0 && st_[u] != st_[v]) {
            if (delta(edge_[u][v]) == 0) {
              if (on_found_edge(edge_[u][v])) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
        }
      }
      long long d = kInf;
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b && side_[b] == 1) d = std::min(d, lab_[b] / 2);
      }
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[x] == x && slack_[x]) {
          if (side_[x] == -1) {
            d = std::min(d, delta(edge_[slack_[x]][x]));
          } else if (side_[x] == 0) {
            d = std::min(d, delta(edge_[slack_[x]][x]) / 2);
          }
        }
      }
      for (int u = 1; u <= n_; ++u) {
        if (side_[st_[u]] == 0) {
          if (lab_[u] <= d) return false;  // dual hits zero: no augmenting path
          lab_[u] -= d;
        } else if (side_[st_[u]] == 1) {
          lab_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b) {
          if (side_[b] == 0) {
            lab_[b] += 2 * d;
          } else if (side_[b] == 1) {
            lab_[b] -= 2 * d;
          }
        }
      }
      q_.clear();
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
            delta(edge_[slack_[x]][x]) == 0) {
          if (on_found_edge(edge_[slack_[x]][x])) return true;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b && side_[b] == 1 && lab_[b] == 0) expand_blossom(b);
      }
    }
  }
};

std::vector<std::pair<int, int>> pairing_blossom(
    const std::vector<std::vector<double>>& d) {
  const int n = static_cast<int>(d.size());
  double max_d = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) max_d = std::max(max_d, d[i][j]);
  }
  // Flip to max-weight with an offset large enough that maximum weight
  // implies maximum cardinality, i.e. a perfect matching of minimum cost.
  const double scale = max_d > 0 ? static_cast<double>(1LL << 34) / max_d : 1.0;
  const long long offset = static_cast<long long>(n) * (1LL << 34) + 2;

  Blossom matcher(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      long long w = offset - static_cast<long long>(std::llround(d[i][j] * scale));
      matcher.set_weight(i + 1, j + 1, w);
    }
  }
  matcher.solve();

  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    int j = matcher.match(i);
    if (j == 0) throw std::logic_error("blossom matching left a vertex unmatched");
    if (i < j) pairs.emplace_back(i - 1, j - 1);
  }
  if (pairs.size() != static_cast<std::size_t>(n) / 2) {
    throw std::logic_error("blossom matching is not perfect");
  }
  return pairs;
}

}  // namespace

std::vector<std::pair<int, int>> min_cost_pairing(
    const std::vector<std::vector<double>>& dist) {
  const std::size_t n = dist.size();
  if (n % 2 != 0) throw std::invalid_argument("pairing needs an even point count");
  if (n == 0) return {};
  if (n <= 20) return pairing_dp(dist);
  return pairing_blossom(dist);
}

}  // namespace mrcov
