#pragma once

// Minimal SVG output for tilings.

#include <string>

#include "ribbon/geometry.hpp"

namespace ribbon {

// One tiling as an SVG document: 24px unit squares, tiles filled by a
// deterministic palette keyed on the tile label, black tile borders.
std::string render_svg(const RegionProfile& region, const Tiling& tiling);

void render_svg_file(const RegionProfile& region, const Tiling& tiling,
                     const std::string& path);

}  // namespace ribbon
