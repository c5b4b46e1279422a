#include "ccert/grid_oracle.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

namespace ccert {

namespace {

long floor_div(const Rat& value, const Rat& step) {
  Rat q = value / step;
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f.get_si();
}

bool on_grid_line(const Rat& value, const Rat& step) {
  Rat q = value / step;
  return q.get_den() == 1;
}

// Exact closed-segment / H-polytope intersection: the parameter interval of
// feasible lambda in [0, 1] is intersected across all half-spaces.
bool segment_hits_body(const Vec& p, const Vec& q, const ConvexBody& body) {
  Rat lo = 0, hi = 1;
  for (const HalfSpace& h : body.halfspaces) {
    Rat at_p = dot(h.normal, p) - h.offset;
    Rat slope = dot(h.normal, q) - h.offset - at_p;
    if (slope == 0) {
      if (at_p > 0) return false;
      continue;
    }
    Rat bound = -at_p / slope;
    if (slope > 0)
      hi = std::min(hi, bound);
    else
      lo = std::max(lo, bound);
    if (lo > hi) return false;
  }
  return true;
}

}  // namespace

bool grid_escape_oracle(const Family& family, std::uint64_t avoid_mask, const Vec& x,
                        const GridOracleConfig& config) {
  if (family.dimension != 2)
    throw std::invalid_argument("grid_escape_oracle: planar only");
  if (config.step <= 0) throw std::invalid_argument("grid_escape_oracle: step > 0");

  Vec lo = config.box.lo;
  const Rat& step = config.step;
  // Shift the grid when x falls exactly on a grid line.
  for (int j = 0; j < 2; ++j)
    if (on_grid_line(x[j] - lo[j], step)) lo[j] -= step / 7;

  long nx = floor_div(config.box.hi[0] - lo[0], step) + 1;
  long ny = floor_div(config.box.hi[1] - lo[1], step) + 1;
  long ix = floor_div(x[0] - lo[0], step);
  long iy = floor_div(x[1] - lo[1], step);
  if (ix < 0 || iy < 0 || ix >= nx || iy >= ny)
    throw std::invalid_argument("grid_escape_oracle: query outside the box");

  auto center = [&](long i, long j) {
    return Vec{lo[0] + step * Rat(2 * i + 1) / 2, lo[1] + step * Rat(2 * j + 1) / 2};
  };
  // A move is blocked when its straight segment meets any avoided body; this
  // sees lower-dimensional bodies that contain no cell center. A successful
  // BFS path is therefore a genuine continuous escape.
  auto move_blocked = [&](const Vec& from, const Vec& to) {
    for (int b = 0; b < family.size(); ++b) {
      if (!(avoid_mask & (std::uint64_t{1} << b))) continue;
      if (segment_hits_body(from, to, family.bodies[b])) return true;
    }
    return false;
  };

  Vec start = center(ix, iy);
  if (move_blocked(x, start)) return false;
  std::vector<char> seen(static_cast<std::size_t>(nx * ny), 0);
  std::deque<std::pair<long, long>> queue;
  seen[static_cast<std::size_t>(ix * ny + iy)] = 1;
  queue.emplace_back(ix, iy);
  const long dx[4] = {1, -1, 0, 0};
  const long dy[4] = {0, 0, 1, -1};
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    if (i == 0 || j == 0 || i == nx - 1 || j == ny - 1) return true;
    Vec here = center(i, j);
    for (int k = 0; k < 4; ++k) {
      long ni = i + dx[k], nj = j + dy[k];
      std::size_t idx = static_cast<std::size_t>(ni * ny + nj);
      if (seen[idx]) continue;
      if (move_blocked(here, center(ni, nj))) continue;
      seen[idx] = 1;
      queue.emplace_back(ni, nj);
    }
  }
  return false;
}

}  // namespace ccert
