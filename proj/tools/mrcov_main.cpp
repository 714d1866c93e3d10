#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mrcov/json_io.hpp"

namespace {

using namespace mrcov;

constexpr int kExitUsage = 1;
constexpr int kExitMapIo = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitStart = 4;

MapFormat parse_format(const std::string& name) {
  if (name == "pgm") return MapFormat::Pgm;
  if (name == "ascii") return MapFormat::Ascii;
  return MapFormat::Auto;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MapIoError("cannot open output file: " + path);
  out << content;
  if (!out) throw MapIoError("write failed: " + path);
}

PixelPoint parse_start(const std::string& text, const GridMap& map) {
  if (text.empty()) return map.first_free();
  int x = 0, y = 0;
  if (std::sscanf(text.c_str(), "%d,%d", &x, &y) != 2) {
    throw StartError("start must be given as x,y");
  }
  if (!map.in_bounds(x, y)) {
    throw StartError("start " + text + " is outside the map bounds");
  }
  return {x, y};
}

struct DecomposeArgs {
  std::string map_path;
  std::string format = "auto";
  std::string out = "-";
  bool largest = false;
};

struct PlanArgs {
  std::string map_path;
  std::string format = "auto";
  std::string algorithm = "crc";
  int robots = 1;
  std::string start;
  double footprint = 0.5;
  bool largest = false;
  std::string out = "-";
  std::string svg;
  bool serial = false;
};

struct BenchArgs {
  int maps = 200;
  std::uint64_t seed = 1;
  std::vector<int> k_list = {1, 2, 4, 8, 16, 20, 32};
  std::string out = "benchmark.csv";
  std::string json;
  bool timing = false;
  bool serial = false;
};

int run_decompose(const DecomposeArgs& args) {
  GridMap map = GridMap::load_file(args.map_path, parse_format(args.format));
  Decomposition d = decompose(map, args.largest);
  // weights need a start; default to the first free pixel of the component
  PixelPoint start = map.first_free();
  if (!d.covered[map.index(start.x, start.y)]) {
    for (int i = 0; i < map.width() * map.height(); ++i) {
      if (d.covered[i]) {
        start = map.point(i);
        break;
      }
    }
  }
  assign_weights(d, map, start);
  DualGraph dual = build_dual(d);
  write_output(args.out, decomposition_json(d, dual, map).dump(2) + "\n");
  return 0;
}

int run_plan(const PlanArgs& args) {
  GridMap map = GridMap::load_file(args.map_path, parse_format(args.format));
  PixelPoint start = parse_start(args.start, map);
  Exec exec = args.serial ? Exec::Serial : Exec::Parallel;
  Workspace ws = build_workspace(std::move(map), start, args.largest, exec);
  Algorithm alg = algorithm_from_string(args.algorithm);
  FootprintSpec fp{args.footprint};
  CoveragePlan plan = plan_coverage(ws, alg, args.robots, fp);
  Metrics metrics = evaluate(plan, plan.single_tour_cost, args.robots);
  write_output(args.out, plan_json(plan, metrics, ws.decomp.reeb, args.map_path).dump(2) + "\n");
  if (!args.svg.empty()) {
    write_output(args.svg, render_svg(ws.map, plan));
  }
  return 0;
}

int run_benchmark(const BenchArgs& args) {
  SuiteParams params;
  params.maps = args.maps;
  params.seed0 = args.seed;
  params.k_list = args.k_list;
  params.timing = args.timing;
  params.exec = args.serial ? Exec::Serial : Exec::Parallel;
  SuiteResult result = run_suite(params);
  write_output(args.out, result.csv());
  if (!args.json.empty()) {
    write_output(args.json, result.aggregate_json());
  }
  std::cout << result.aggregate_table();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mrcov: multi-robot coverage planning over occupancy grids\n"
      "exit codes: 0 ok, 1 usage, 2 map/file i/o, 3 disconnected free space, "
      "4 bad start pixel"};
  app.require_subcommand(1);

  DecomposeArgs dargs;
  auto* dec = app.add_subcommand("decompose",
                                 "Boustrophedon decomposition and Reeb/dual graphs as JSON");
  dec->add_option("--map", dargs.map_path, "occupancy map file (PGM or ASCII grid)")
      ->required();
  dec->add_option("--format", dargs.format, "map format: pgm, ascii, auto")
      ->check(CLI::IsMember({"pgm", "ascii", "auto"}));
  dec->add_flag("--largest-component", dargs.largest,
                "plan for the largest free component instead of failing");
  dec->add_option("--out", dargs.out, "output path, - for stdout");

  PlanArgs pargs;
  auto* plan = app.add_subcommand("plan", "Plan a multi-robot coverage mission");
  plan->add_option("--map", pargs.map_path, "occupancy map file")->required();
  plan->add_option("--format", pargs.format, "map format: pgm, ascii, auto")
      ->check(CLI::IsMember({"pgm", "ascii", "auto"}));
  plan->add_option("--algorithm", pargs.algorithm, "crc, cac, nrc or fhk")
      ->check(CLI::IsMember({"crc", "cac", "nrc", "fhk"}));
  plan->add_option("--robots", pargs.robots, "team size k")->check(CLI::Range(1, 100000));
  plan->add_option("--start", pargs.start, "start pixel as x,y (default: first free)");
  plan->add_option("--footprint", pargs.footprint, "swath half-width in pixels")
      ->check(CLI::PositiveNumber);
  plan->add_flag("--largest-component", pargs.largest,
                 "plan for the largest free component instead of failing");
  plan->add_option("--out", pargs.out, "plan JSON path, - for stdout");
  plan->add_option("--svg", pargs.svg, "also render the plan as SVG");
  plan->add_flag("--serial", pargs.serial, "disable OpenMP kernels");

  BenchArgs bargs;
  auto* bench = app.add_subcommand("benchmark",
                                   "Run the randomized benchmark suite and emit CSV");
  bench->add_option("--maps", bargs.maps, "number of generated maps")
      ->check(CLI::Range(1, 100000));
  bench->add_option("--seed", bargs.seed, "base seed; map i uses seed+i");
  bench->add_option("--k-list", bargs.k_list, "team sizes to evaluate")
      ->delimiter(',');
  bench->add_option("--out", bargs.out, "CSV output path, - for stdout");
  bench->add_option("--json", bargs.json, "also write the aggregate table as JSON");
  bench->add_flag("--timing", bargs.timing,
                  "record wall_ms per run (off keeps reruns byte-identical)");
  bench->add_flag("--serial", bargs.serial, "disable OpenMP over seeds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dec->parsed()) return run_decompose(dargs);
    if (plan->parsed()) return run_plan(pargs);
    if (bench->parsed()) return run_benchmark(bargs);
  } catch (const MapIoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMapIo;
  } catch (const DisconnectedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisconnected;
  } catch (const StartError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStart;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
