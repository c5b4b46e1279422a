#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccert/geometry.hpp"

namespace ccert {

struct SvgOverlays {
  std::vector<std::pair<Vec, std::string>> points;  // marker with label
  std::vector<std::vector<Vec>> paths;              // polylines (escape paths)
  std::vector<int> group_of_body;  // optional color class per body index
};

// Deterministic SVG for planar families: one polygon/segment per body
// labeled by name, overlay markers and polylines, viewBox padded around the
// drawn geometry. Byte-identical for identical input.
std::string render_svg(const Family& family, const SvgOverlays& overlays = {});

}  // namespace ccert
