#pragma once

#include "knaster/plmap.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knaster {

struct PlotSpec {
  std::vector<std::pair<PLMap, std::string>> maps;
  int width = 480;
  int height = 480;
  /// Draw vertical fold lines at k/grid.
  std::optional<std::uint64_t> grid;
};

/// SVG 1.1 document with one panel per map, side by side, each showing the
/// unit square and the graph as a polyline with one point per breakpoint.
/// Rationals become decimals only here; output is byte-for-byte
/// deterministic. Throws InvalidInput for an empty map list or
/// non-positive size.
std::string render_svg(const PlotSpec& spec);

} // namespace knaster
