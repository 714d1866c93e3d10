#include <cstdio>
#include <sstream>

#include "mrcov/json_io.hpp"

namespace mrcov {

namespace {

// Fixed 32-color palette, cycled per robot id.
const char* kPalette[32] = {
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#800000", "#aaffc3",
    "#808000", "#ffd8b1", "#000075", "#808080", "#1f77b4", "#ff7f0e", "#2ca02c",
    "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#393b79", "#637939", "#8c6d31", "#843c39"};

std::string points_attr(const std::vector<Waypoint>& run) {
  std::ostringstream out;
  char buf[48];
  for (std::size_t i = 0; i < run.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s%.1f,%.1f", i ? " " : "", run[i].pos.x + 0.5,
                  run[i].pos.y + 0.5);
    out << buf;
  }
  return out.str();
}

}  // namespace

std::string render_svg(const GridMap& map, const CoveragePlan& plan) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << map.width()
      << "\" height=\"" << map.height() << "\" viewBox=\"0 0 " << map.width() << " "
      << map.height() << "\">\n";
  svg << "  <rect width=\"" << map.width() << "\" height=\"" << map.height()
      << "\" fill=\"#ffffff\"/>\n";
  // obstacles as horizontal run-length rects
  for (int y = 0; y < map.height(); ++y) {
    int x = 0;
    while (x < map.width()) {
      if (map.free_at(x, y)) {
        ++x;
        continue;
      }
      int x0 = x;
      while (x < map.width() && !map.free_at(x, y)) ++x;
      svg << "  <rect x=\"" << x0 << "\" y=\"" << y << "\" width=\"" << (x - x0)
          << "\" height=\"1\" fill=\"#222222\"/>\n";
    }
  }
  for (std::size_t i = 0; i < plan.paths.size(); ++i) {
    const char* color = kPalette[i % 32];
    const auto& wps = plan.paths[i].waypoints;
    std::size_t pos = 0;
    while (pos < wps.size()) {
      WaypointKind kind = wps[pos].kind;
      std::vector<Waypoint> run;
      if (pos > 0) run.push_back(wps[pos - 1]);  // keep runs connected
      while (pos < wps.size() && wps[pos].kind == kind) run.push_back(wps[pos++]);
      if (run.size() < 2) continue;
      svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
          << (kind == WaypointKind::Cover ? "0.6" : "0.35") << "\"";
      if (kind == WaypointKind::Transit) svg << " stroke-dasharray=\"1,1\"";
      svg << " points=\"" << points_attr(run) << "\"/>\n";
    }
  }
  svg << "  <circle cx=\"" << plan.start.x + 0.5 << "\" cy=\"" << plan.start.y + 0.5
      << "\" r=\"1.2\" fill=\"#000000\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mrcov
