#pragma once

#include <string>
#include <vector>

#include "ccert/linalg.hpp"

namespace ccert {

// Closed half-space {x : normal . x <= offset}. The normal must be nonzero.
struct HalfSpace {
  Vec normal;
  Rat offset;

  int dim() const { return static_cast<int>(normal.size()); }
  bool contains(const Vec& p) const { return dot(normal, p) <= offset; }
};

// H-polytope: a finite conjunction of closed half-spaces. May be
// lower-dimensional (a hyperplane is two opposing half-spaces) or unbounded.
struct ConvexBody {
  std::string name;
  std::vector<HalfSpace> halfspaces;

  int dim() const { return halfspaces.empty() ? -1 : halfspaces[0].dim(); }
  bool contains(const Vec& p) const {
    for (const HalfSpace& h : halfspaces)
      if (!h.contains(p)) return false;
    return true;
  }
};

// Ordered list of named bodies in a fixed ambient dimension.
struct Family {
  int dimension = 0;
  std::vector<ConvexBody> bodies;

  int size() const { return static_cast<int>(bodies.size()); }
};

// x -> matrix * x + translation; the matrix must be invertible when the map
// is used for invariance testing.
struct AffineMap {
  Mat matrix;
  Vec translation;
};

// Affine m-flat: basepoint + span of `directions` (rows, linearly
// independent, 0 <= m < d).
struct Flat {
  Vec basepoint;
  Mat directions;

  int m() const { return static_cast<int>(directions.size()); }
};

// Axis-aligned box, lo[i] <= x[i] <= hi[i].
struct Box {
  Vec lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }
};

}  // namespace ccert
