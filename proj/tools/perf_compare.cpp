// Compares the serial reference implementations against the OpenMP kernels
// on the same workload and prints timings; exits nonzero if results differ.
#include <chrono>
#include <cstdio>
#include <string>

#include "mrcov/bench.hpp"

using namespace mrcov;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int maps = argc > 1 ? std::atoi(argv[1]) : 24;
  std::printf("threads available: %d\n", max_threads());

  // Kernel 1: per-vertex geodesic fields on one generated map.
  EnvParams env;
  env.seed = 7;
  GridMap map = generate_env(env);
  Decomposition d = decompose(map);
  std::vector<PixelPoint> sources;
  for (const auto& v : d.reeb.vertices) sources.push_back(v.pos);

  auto t0 = std::chrono::steady_clock::now();
  auto serial_fields = geodesic_fields(map, sources, Exec::Serial);
  double t_serial_fields = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto parallel_fields = geodesic_fields(map, sources, Exec::Parallel);
  double t_parallel_fields = seconds_since(t0);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (serial_fields[i].dist != parallel_fields[i].dist) {
      std::fprintf(stderr, "geodesic_fields mismatch at source %zu\n", i);
      return 1;
    }
  }
  std::printf("geodesic_fields (%zu sources): serial %.3fs, openmp %.3fs, speedup %.2fx\n",
              sources.size(), t_serial_fields, t_parallel_fields,
              t_serial_fields / t_parallel_fields);

  // Kernel 2: the benchmark suite over seeds.
  SuiteParams params;
  params.maps = maps;
  params.k_list = {1, 4, 16};

  params.exec = Exec::Serial;
  t0 = std::chrono::steady_clock::now();
  SuiteResult serial = run_suite(params);
  double t_serial = seconds_since(t0);

  params.exec = Exec::Parallel;
  t0 = std::chrono::steady_clock::now();
  SuiteResult parallel = run_suite(params);
  double t_parallel = seconds_since(t0);

  if (serial.csv() != parallel.csv()) {
    std::fprintf(stderr, "run_suite: serial and openmp CSV differ\n");
    return 1;
  }
  std::printf("run_suite (%d maps): serial %.3fs, openmp %.3fs, speedup %.2fx\n", maps,
              t_serial, t_parallel, t_serial / t_parallel);
  std::printf("results identical across modes\n");
  return 0;
}
