#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrcov/planner.hpp"

namespace mrcov {

// Deterministic splitmix64 stream; identical across platforms.
struct Rng {
  std::uint64_t state = 0;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // inclusive bounds
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

struct EnvParams {
  int width = 100;
  int height = 100;
  int min_obstacles = 12;
  int max_obstacles = 16;
  int min_size = 3;
  int max_size = 35;
  int margin = 2;       // free ring kept around the border
  int separation = 2;   // minimum free gap between obstacles
  int max_attempts = 200;
  std::uint64_t seed = 0;
};

// Axis-aligned rectangular obstacles placed uniformly at random; resampled
// until the free space is one 4-connected component.
GridMap generate_env(const EnvParams& params);

struct Metrics {
  int k = 1;
  double utilization_pct = 0.0;  // robots with nonzero coverage
  double max_cost = 0.0;
  double max_cost_ratio = 0.0;   // max_cost / single-robot tour cost
  std::vector<double> robot_costs;
  int idle_count = 0;
};

Metrics evaluate(const CoveragePlan& plan, double single_tour_cost, int k);

struct SuiteParams {
  EnvParams env;
  std::uint64_t seed0 = 1;
  int maps = 200;
  std::vector<int> k_list = {1, 2, 4, 8, 16, 20, 32};
  std::vector<Algorithm> algorithms = {Algorithm::Crc, Algorithm::Cac, Algorithm::Nrc,
                                       Algorithm::Fhk};
  FootprintSpec footprint;
  bool timing = false;        // when off, wall_ms is written as 0 so reruns are byte-identical
  Exec exec = Exec::Parallel;
};

struct SuiteRow {
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::Crc;
  int k = 1;
  double utilization_pct = 0.0;
  double max_cost = 0.0;
  double max_cost_ratio = 0.0;
  double total_cost_sum = 0.0;
  int idle_count = 0;
  long long wall_ms = 0;
};

struct GraphStats {
  std::uint64_t seed = 0;
  int vertices = 0;
  int edges = 0;
  int tour_length = 0;
  double tour_cost = 0.0;
};

struct AggregateEntry {
  Algorithm algorithm = Algorithm::Crc;
  int k = 0;  // 0 = overall mean over k > 1
  double mean_utilization_pct = 0.0;
  double mean_max_cost_ratio = 0.0;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;     // sorted by (seed, algorithm name, k)
  std::vector<GraphStats> stats;  // one per seed
  std::string csv() const;
  std::vector<AggregateEntry> aggregate() const;  // per (algorithm, k) then overall
  std::string aggregate_json() const;
  std::string aggregate_table() const;
};

// Runs every (seed, algorithm, k) combination, verifying complete coverage
// and tour invariants along the way (throws on the first violation).
SuiteResult run_suite(const SuiteParams& params);

}  // namespace mrcov
