#pragma once

#include "ccert/geometry.hpp"

namespace ccert::fixtures {

inline ConvexBody segment_body(const std::string& name, const Vec& a, const Vec& b) {
  // Carrier line plus two perpendicular end bounds.
  Vec dir = sub(b, a);
  Vec normal{-dir[1], dir[0]};
  ConvexBody body;
  body.name = name;
  body.halfspaces.push_back({normal, dot(normal, a)});
  body.halfspaces.push_back({scale(normal, Rat(-1)), -dot(normal, a)});
  body.halfspaces.push_back({scale(dir, Rat(-1)), -dot(dir, a)});
  body.halfspaces.push_back({dir, dot(dir, b)});
  return body;
}

// Edges of the 3-4-5 right triangle (0,0), (4,0), (0,3); its incenter is
// exactly (1,1).
inline Family triangle_edges() {
  Family family;
  family.dimension = 2;
  Vec v0{Rat(0), Rat(0)}, v1{Rat(4), Rat(0)}, v2{Rat(0), Rat(3)};
  family.bodies.push_back(segment_body("bottom", v0, v1));
  family.bodies.push_back(segment_body("left", v0, v2));
  family.bodies.push_back(segment_body("hyp", v1, v2));
  return family;
}

inline ConvexBody line_body(const std::string& name, const Vec& normal, const Rat& offset) {
  ConvexBody body;
  body.name = name;
  body.halfspaces.push_back({normal, offset});
  body.halfspaces.push_back({scale(normal, Rat(-1)), -offset});
  return body;
}

// Six lines bounding two nested triangles (all slopes distinct, so every
// pair meets): the outer x=0, y=0, x+y=6 and an inner triangle around
// (2, 2). Pi_2 holds; points inside the inner triangle have depth >= 2.
inline Family nested_triangles() {
  Family family;
  family.dimension = 2;
  family.bodies.push_back(line_body("A0", {Rat(1), Rat(0)}, Rat(0)));
  family.bodies.push_back(line_body("A1", {Rat(0), Rat(1)}, Rat(0)));
  family.bodies.push_back(line_body("A2", {Rat(1), Rat(1)}, Rat(6)));
  // y = x - 1/2, y = 2x - 5/2, y = -x/2 + 7/2.
  family.bodies.push_back(line_body("B0", {Rat(2), Rat(-2)}, Rat(1)));
  family.bodies.push_back(line_body("B1", {Rat(4), Rat(-2)}, Rat(5)));
  family.bodies.push_back(line_body("B2", {Rat(1), Rat(2)}, Rat(7)));
  return family;
}

// Interior point of the inner triangle above (and of the outer one).
inline Vec nested_inner_point() { return {make_rat(106, 45), make_rat(179, 90)}; }

// Two tall boxes per family; any vertical line with the right abscissa
// separates both pairs.
inline Family slab_family(const Rat& x0, const Rat& x1, const Rat& x2, const Rat& x3,
                          const std::string& prefix) {
  Family family;
  family.dimension = 2;
  auto slab = [&](const std::string& name, const Rat& lo, const Rat& hi) {
    ConvexBody body;
    body.name = name;
    body.halfspaces = {{{Rat(1), Rat(0)}, hi},
                       {{Rat(-1), Rat(0)}, -lo},
                       {{Rat(0), Rat(1)}, Rat(10)},
                       {{Rat(0), Rat(-1)}, Rat(10)}};
    return body;
  };
  family.bodies.push_back(slab(prefix + "0", x0, x1));
  family.bodies.push_back(slab(prefix + "1", x2, x3));
  return family;
}

// Extrudes a planar family along z into prisms with |z| <= height.
inline Family extrude(const Family& planar, const Rat& height, const std::string& suffix) {
  Family family;
  family.dimension = 3;
  for (const ConvexBody& body : planar.bodies) {
    ConvexBody prism;
    prism.name = body.name + suffix;
    for (const HalfSpace& h : body.halfspaces)
      prism.halfspaces.push_back({{h.normal[0], h.normal[1], Rat(0)}, h.offset});
    prism.halfspaces.push_back({{Rat(0), Rat(0), Rat(1)}, height});
    prism.halfspaces.push_back({{Rat(0), Rat(0), Rat(-1)}, height});
    family.bodies.push_back(std::move(prism));
  }
  return family;
}

}  // namespace ccert::fixtures
