#include "ribbon/svg.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ribbon {

namespace {

constexpr int kUnit = 24;

std::string fill_for(int label) {
  // Golden-angle hue walk keeps neighboring labels distinguishable.
  const int hue = (label * 137) % 360;
  std::ostringstream s;
  s << "hsl(" << hue << ",62%,72%)";
  return s.str();
}

}  // namespace

std::string render_svg(const RegionProfile& region, const Tiling& tiling) {
  const long edge = region.right_edge();
  if (edge < 0) throw std::invalid_argument("malformed region profile");
  const int rows = region.rows();
  const long width = edge * kUnit;
  const long height = static_cast<long>(rows) * kUnit;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  for (const RibbonTile& tile : tiling) {
    const auto squares = tile.squares();
    std::set<std::pair<int, int>> cells;
    for (const Square& s : squares) cells.insert({s.x, s.y});
    const std::string fill = fill_for(tile.tile_level());
    for (const Square& s : squares) {
      const long px = static_cast<long>(s.x) * kUnit;
      const long py = static_cast<long>(rows - 1 - s.y) * kUnit;
      svg << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << kUnit
          << "\" height=\"" << kUnit << "\" fill=\"" << fill << "\"/>\n";
    }
    // Tile outline: edges whose neighbor cell is outside the tile.
    for (const Square& s : squares) {
      const long px = static_cast<long>(s.x) * kUnit;
      const long py = static_cast<long>(rows - 1 - s.y) * kUnit;
      const auto stroke_line = [&svg](long x1, long y1, long x2, long y2) {
        svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
            << "\" y2=\"" << y2
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
      };
      if (!cells.count({s.x - 1, s.y})) stroke_line(px, py, px, py + kUnit);
      if (!cells.count({s.x + 1, s.y}))
        stroke_line(px + kUnit, py, px + kUnit, py + kUnit);
      if (!cells.count({s.x, s.y + 1})) stroke_line(px, py, px + kUnit, py);
      if (!cells.count({s.x, s.y - 1}))
        stroke_line(px, py + kUnit, px + kUnit, py + kUnit);
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void render_svg_file(const RegionProfile& region, const Tiling& tiling,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << render_svg(region, tiling);
}

}  // namespace ribbon
