#include "mrcov/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mrcov {

namespace {

struct Rect {
  int x, y, w, h;
};

bool too_close(const Rect& a, const Rect& b, int gap) {
  return a.x < b.x + b.w + gap && b.x < a.x + a.w + gap && a.y < b.y + b.h + gap &&
         b.y < a.y + a.h + gap;
}

}  // namespace

GridMap generate_env(const EnvParams& p) {
  if (p.width < 4 || p.height < 4) throw std::invalid_argument("environment too small");
  Rng rng{0x6d7263766d617073ull ^ p.seed};
  for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
    int count = p.min_obstacles <= p.max_obstacles
                    ? rng.uniform(p.min_obstacles, p.max_obstacles)
                    : 0;
    std::vector<Rect> rects;
    bool ok = true;
    for (int i = 0; i < count && ok; ++i) {
      bool placed = false;
      for (int t = 0; t < 60 && !placed; ++t) {
        int w = rng.uniform(p.min_size, std::min(p.max_size, p.width - 2 * p.margin));
        int h = rng.uniform(p.min_size, std::min(p.max_size, p.height - 2 * p.margin));
        Rect r{rng.uniform(p.margin, p.width - p.margin - w),
               rng.uniform(p.margin, p.height - p.margin - h), w, h};
        bool clash = false;
        for (const Rect& o : rects) {
          if (too_close(r, o, p.separation)) {
            clash = true;
            break;
          }
        }
        if (!clash) {
          rects.push_back(r);
          placed = true;
        }
      }
      if (!placed) ok = false;  // overcrowded draw, restart the attempt
    }
    if (!ok) continue;
    std::vector<std::uint8_t> occ(static_cast<std::size_t>(p.width) * p.height, 0);
    for (const Rect& r : rects) {
      for (int y = r.y; y < r.y + r.h; ++y) {
        for (int x = r.x; x < r.x + r.w; ++x) {
          occ[static_cast<std::size_t>(y) * p.width + x] = 1;
        }
      }
    }
    GridMap map(p.width, p.height, std::move(occ));
    if (free_components(map).size() == 1) return map;
  }
  throw std::runtime_error("generate_env: retry budget exhausted; relax the parameters");
}

Metrics evaluate(const CoveragePlan& plan, double single_tour_cost, int k) {
  if (single_tour_cost <= 0.0) {
    throw std::invalid_argument("evaluate: reference tour cost must be positive");
  }
  Metrics m;
  m.k = k;
  int coverers = 0;
  for (const RobotTour& r : plan.robots) {
    m.robot_costs.push_back(r.total_cost);
    m.max_cost = std::max(m.max_cost, r.total_cost);
    if (!r.idle) ++coverers;
  }
  m.utilization_pct = 100.0 * coverers / k;
  m.idle_count = k - coverers;
  m.max_cost_ratio = m.max_cost / single_tour_cost;
  return m;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void check_plan(const Workspace& ws, const CoveragePlan& plan,
                const FootprintSpec& footprint) {
  CoverageReport rep = verify_coverage(plan.paths, ws.map, footprint);
  if (rep.missed != 0) {
    throw std::logic_error("suite: incomplete coverage (" + std::to_string(rep.missed) +
                           " free pixels missed) for " + to_string(plan.algorithm) +
                           " k=" + std::to_string(plan.k));
  }
  // every cell covered exactly once across robots
  std::vector<int> covered(ws.decomp.cells.size(), 0);
  for (const RobotTour& r : plan.robots) {
    for (const TourStep& s : r.steps) {
      if (!s.duplicate) covered[s.edge] += 1;
    }
  }
  for (std::size_t c = 0; c < covered.size(); ++c) {
    if (covered[c] != 1) {
      throw std::logic_error("suite: cell " + std::to_string(c) + " covered " +
                             std::to_string(covered[c]) + " times by " +
                             to_string(plan.algorithm));
    }
  }
}

}  // namespace

SuiteResult run_suite(const SuiteParams& params) {
  SuiteResult result;
  const int maps = params.maps;
  result.stats.resize(maps);
  std::vector<std::vector<SuiteRow>> per_seed(maps);
  std::vector<std::string> errors(maps);

  for_each_index(params.exec, maps, [&](int i) {
    try {
      EnvParams env = params.env;
      env.seed = params.seed0 + static_cast<std::uint64_t>(i);
      GridMap map = generate_env(env);
      PixelPoint start = map.first_free();
      Workspace ws = build_workspace(std::move(map), start, false, Exec::Serial);

      std::string why;
      if (!check_tour(ws.multi, ws.tour, &why)) {
        throw std::logic_error("suite: invalid tour on seed " +
                               std::to_string(env.seed) + ": " + why);
      }
      result.stats[i] = {env.seed, static_cast<int>(ws.decomp.reeb.vertices.size()),
                         static_cast<int>(ws.decomp.reeb.edges.size()),
                         static_cast<int>(ws.tour.steps.size()), ws.tour.total_cost};

      for (Algorithm alg : params.algorithms) {
        for (int k : params.k_list) {
          auto t0 = std::chrono::steady_clock::now();
          CoveragePlan plan = plan_coverage(ws, alg, k, params.footprint);
          check_plan(ws, plan, params.footprint);
          Metrics m = evaluate(plan, ws.tour.total_cost, k);
          auto t1 = std::chrono::steady_clock::now();
          SuiteRow row;
          row.seed = env.seed;
          row.algorithm = alg;
          row.k = k;
          row.utilization_pct = m.utilization_pct;
          row.max_cost = m.max_cost;
          row.max_cost_ratio = m.max_cost_ratio;
          for (double c : m.robot_costs) row.total_cost_sum += c;
          row.idle_count = m.idle_count;
          row.wall_ms =
              params.timing
                  ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  : 0;
          per_seed[i].push_back(row);
        }
      }
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  for (int i = 0; i < maps; ++i) {
    if (!errors[i].empty()) throw std::runtime_error(errors[i]);
    for (const SuiteRow& row : per_seed[i]) result.rows.push_back(row);
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const SuiteRow& a, const SuiteRow& b) {
              if (a.seed != b.seed) return a.seed < b.seed;
              std::string an = to_string(a.algorithm), bn = to_string(b.algorithm);
              if (an != bn) return an < bn;
              return a.k < b.k;
            });
  return result;
}

std::string SuiteResult::csv() const {
  std::ostringstream out;
  out << "seed,algorithm,k,utilization_pct,max_cost,max_cost_ratio,total_cost_sum,"
         "idle_count,wall_ms\n";
  for (const SuiteRow& r : rows) {
    out << r.seed << ',' << to_string(r.algorithm) << ',' << r.k << ','
        << fmt(r.utilization_pct) << ',' << fmt(r.max_cost) << ','
        << fmt(r.max_cost_ratio) << ',' << fmt(r.total_cost_sum) << ',' << r.idle_count
        << ',' << r.wall_ms << '\n';
  }
  return out.str();
}

std::vector<AggregateEntry> SuiteResult::aggregate() const {
  std::map<std::pair<std::string, int>, std::pair<double, double>> sums;
  std::map<std::pair<std::string, int>, int> counts;
  for (const SuiteRow& r : rows) {
    auto key = std::make_pair(to_string(r.algorithm), r.k);
    sums[key].first += r.utilization_pct;
    sums[key].second += r.max_cost_ratio;
    counts[key] += 1;
    if (r.k > 1) {
      auto overall = std::make_pair(to_string(r.algorithm), 0);
      sums[overall].first += r.utilization_pct;
      sums[overall].second += r.max_cost_ratio;
      counts[overall] += 1;
    }
  }
  std::vector<AggregateEntry> entries;
  for (const auto& [key, sum] : sums) {
    AggregateEntry e;
    e.algorithm = algorithm_from_string(key.first);
    e.k = key.second;
    e.mean_utilization_pct = sum.first / counts[key];
    e.mean_max_cost_ratio = sum.second / counts[key];
    entries.push_back(e);
  }
  std::sort(entries.begin(), entries.end(), [](const AggregateEntry& a,
                                               const AggregateEntry& b) {
    if (a.k != b.k) return a.k < b.k;
    return to_string(a.algorithm) < to_string(b.algorithm);
  });
  return entries;
}

std::string SuiteResult::aggregate_json() const {
  nlohmann::json per_k = nlohmann::json::array();
  nlohmann::json overall = nlohmann::json::array();
  for (const AggregateEntry& e : aggregate()) {
    nlohmann::json item = {{"algorithm", to_string(e.algorithm)},
                           {"mean_utilization_pct", e.mean_utilization_pct},
                           {"mean_max_cost_ratio", e.mean_max_cost_ratio}};
    if (e.k == 0) {
      overall.push_back(item);
    } else {
      item["k"] = e.k;
      per_k.push_back(item);
    }
  }
  nlohmann::json doc = {{"per_k", per_k}, {"overall_k_gt_1", overall}};
  return doc.dump(2) + "\n";
}

std::string SuiteResult::aggregate_table() const {
  std::ostringstream out;
  out << "algorithm      k   mean_util%   mean_ratio\n";
  char buf[128];
  for (const AggregateEntry& e : aggregate()) {
    if (e.k == 0) {
      std::snprintf(buf, sizeof(buf), "%-9s  all>1   %10.1f   %10.3f\n",
                    to_string(e.algorithm).c_str(), e.mean_utilization_pct,
                    e.mean_max_cost_ratio);
    } else {
      std::snprintf(buf, sizeof(buf), "%-9s  %5d   %10.1f   %10.3f\n",
                    to_string(e.algorithm).c_str(), e.k, e.mean_utilization_pct,
                    e.mean_max_cost_ratio);
    }
    out << buf;
  }
  return out.str();
}

}  // namespace mrcov
