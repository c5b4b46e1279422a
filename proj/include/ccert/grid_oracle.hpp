#pragma once

#include <cstdint>

#include "ccert/geometry.hpp"

namespace ccert {

struct GridOracleConfig {
  Box box;
  Rat step;  // > 0; the box must cover all bodies and queries with margin
};

// Independent escape oracle: 4-neighbor BFS over grid cells, from the cell
// of x to the box boundary, where a move between neighboring cell centers is
// blocked when its segment meets any avoided body. A found path is a genuine
// continuous escape, so positive answers are always sound; negative answers
// are advisory and require feature separation > 4 * step. The grid is
// shifted deterministically when x falls on a grid line.
bool grid_escape_oracle(const Family& family, std::uint64_t avoid_mask, const Vec& x,
                        const GridOracleConfig& config);

}  // namespace ccert
