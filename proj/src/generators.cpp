#include "ccert/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "ccert/analysis.hpp"
#include "ccert/body_ops.hpp"
#include "ccert/lp.hpp"

namespace ccert {

namespace {

long rand_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ConvexBody line_body(const std::string& name, const Vec& normal, const Rat& offset) {
  ConvexBody body;
  body.name = name;
  body.halfspaces.push_back({normal, offset});
  body.halfspaces.push_back({scale(normal, Rat(-1)), -offset});
  return body;
}

}  // namespace

Family gen_lines_general_position(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_lines_general_position: n >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vec> normals;
    std::vector<Rat> offsets;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Vec a{Rat(rand_in(rng, -9, 9)), Rat(rand_in(rng, -9, 9))};
      Rat b(rand_in(rng, -9, 9));
      if (is_zero(a)) {
        ok = false;
        break;
      }
      for (std::size_t j = 0; j < normals.size(); ++j) {
        if (normals[j][0] * a[1] - normals[j][1] * a[0] == 0) ok = false;  // parallel
      }
      normals.push_back(a);
      offsets.push_back(b);
    }
    if (!ok) continue;
    // No three concurrent: each pairwise intersection avoids the other lines.
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        auto p = solve_linear(Mat{normals[i], normals[j]}, Vec{offsets[i], offsets[j]});
        for (int l = 0; l < n && ok; ++l) {
          if (l == i || l == j) continue;
          if (dot(normals[l], *p) == offsets[l]) ok = false;
        }
      }
    }
    if (!ok) continue;
    Family family;
    family.dimension = 2;
    for (int i = 0; i < n; ++i)
      family.bodies.push_back(line_body("L" + std::to_string(i), normals[i], offsets[i]));
    if (!check_pik(family, 2).holds) continue;  // cannot fail for these lines
    return family;
  }
  throw std::runtime_error("gen_lines_general_position: rejection cap exhausted");
}

Family gen_concurrent_lines(int n, const Vec& point) {
  if (n < 1) throw std::invalid_argument("gen_concurrent_lines: n >= 1");
  Family family;
  family.dimension = static_cast<int>(point.size());
  if (family.dimension != 2)
    throw std::invalid_argument("gen_concurrent_lines: planar only");
  for (int i = 0; i < n; ++i) {
    Vec normal{Rat(1), Rat(i)};
    if (i == n - 1 && n > 1) normal = Vec{Rat(0), Rat(1)};  // include a horizontal line
    family.bodies.push_back(
        line_body("C" + std::to_string(i), normal, dot(normal, point)));
  }
  if (!check_pik(family, n).holds)
    throw std::runtime_error("gen_concurrent_lines: verification failed");
  return family;
}

namespace {

struct PythagoreanPose {
  Rat leg_x, leg_y, hyp;
  Rat cos_t, sin_t;  // rational rotation
  Vec shift;
};

PythagoreanPose pick_pose(std::mt19937_64& rng, bool canonical) {
  static const long triples[][3] = {{4, 3, 5},   {12, 5, 13}, {8, 15, 17},
                                    {24, 7, 25}, {20, 21, 29}};
  static const long rotations[][3] = {{1, 0, 1}, {4, 3, 5}, {3, 4, 5}, {12, 5, 13}};
  PythagoreanPose pose;
  if (canonical) {
    pose.leg_x = 4;
    pose.leg_y = 3;
    pose.hyp = 5;
    pose.cos_t = 1;
    pose.sin_t = 0;
    pose.shift = {Rat(0), Rat(0)};
    return pose;
  }
  const long* t = triples[rng() % 5];
  Rat s = make_rat(Int(rand_in(rng, 1, 3)), Int(rand_in(rng, 1, 2)));
  pose.leg_x = Rat(t[0]) * s;
  pose.leg_y = Rat(t[1]) * s;
  pose.hyp = Rat(t[2]) * s;
  const long* r = rotations[rng() % 4];
  long flip = rand_in(rng, 0, 1) ? 1 : -1;
  pose.cos_t = make_rat(Int(r[0]), Int(r[2]));
  pose.sin_t = make_rat(Int(flip * r[1]), Int(r[2]));
  pose.shift = {Rat(rand_in(rng, -5, 5)), Rat(rand_in(rng, -5, 5))};
  return pose;
}

}  // namespace

SimplexFacetInstance gen_simplex_facet_instance(int d, const Rat& thickness,
                                                std::uint64_t seed) {
  if (thickness <= 0)
    throw std::invalid_argument("gen_simplex_facet_bodies: thickness > 0");
  if (d != 2 && d != 3)
    throw std::invalid_argument("gen_simplex_facet_bodies: d in {2, 3}");
  std::mt19937_64 rng(seed);

  Mat verts;
  Vec base_point;
  if (d == 2) {
    PythagoreanPose pose = pick_pose(rng, seed == 0);
    Mat raw{{Rat(0), Rat(0)}, {pose.leg_x, Rat(0)}, {Rat(0), pose.leg_y}};
    // Incenter of the right triangle with rational side lengths.
    Rat per = pose.leg_x + pose.leg_y + pose.hyp;
    Vec inc = zero_vec(2);
    Rat side[3] = {pose.hyp, pose.leg_y, pose.leg_x};  // length opposite each vertex
    for (int i = 0; i < 3; ++i) inc = add(inc, scale(raw[i], side[i] / per));
    auto place = [&](const Vec& p) {
      return Vec{pose.cos_t * p[0] - pose.sin_t * p[1] + pose.shift[0],
                 pose.sin_t * p[0] + pose.cos_t * p[1] + pose.shift[1]};
    };
    for (const Vec& v : raw) verts.push_back(place(v));
    base_point = place(inc);
  } else {
    Rat s = Rat(4);
    verts = {{Rat(0), Rat(0), Rat(0)},
             {s, Rat(0), Rat(0)},
             {Rat(0), s, Rat(0)},
             {Rat(0), Rat(0), s}};
    base_point = {s / 4, s / 4, s / 4};  // centroid
  }

  // Facet i lies opposite vertex i; its half-space a.x <= b is oriented so
  // the whole simplex satisfies it, with equality exactly on the facet.
  std::vector<HalfSpace> facets;
  for (int i = 0; i <= d; ++i) {
    Mat others;
    for (int j = 0; j <= d; ++j)
      if (j != i) others.push_back(verts[j]);
    // Hyperplane through the other vertices: normal from the nullspace of
    // the difference matrix.
    Mat diffs;
    for (std::size_t j = 1; j < others.size(); ++j)
      diffs.push_back(sub(others[j], others[0]));
    Mat ns = nullspace(diffs);
    Vec normal = ns[0];
    Rat b = dot(normal, others[0]);
    if (dot(normal, verts[i]) > b) {
      normal = scale(normal, Rat(-1));
      b = -b;
    }
    facets.push_back({normal, b});
  }

  Rat t = thickness;
  for (int shrink = 0; shrink < 40; ++shrink) {
    Family family;
    family.dimension = d;
    for (int i = 0; i <= d; ++i) {
      ConvexBody body;
      body.name = "F" + std::to_string(i);
      Rat ti = t;
      body.halfspaces.push_back({facets[i].normal, facets[i].offset + ti});
      body.halfspaces.push_back(
          {scale(facets[i].normal, Rat(-1)), -(facets[i].offset - ti)});
      for (int j = 0; j <= d; ++j)
        if (j != i)
          body.halfspaces.push_back({facets[j].normal, facets[j].offset + t});
      family.bodies.push_back(std::move(body));
    }
    if (check_pik(family, d).holds && !check_pik(family, d + 1).holds) {
      SimplexFacetInstance instance;
      instance.family = std::move(family);
      instance.base_point = base_point;
      instance.thickness_used = t;
      return instance;
    }
    t /= 2;
  }
  throw std::runtime_error("gen_simplex_facet_bodies: no viable thickness");
}

Family gen_simplex_facet_bodies(int d, const Rat& thickness, std::uint64_t seed) {
  return gen_simplex_facet_instance(d, thickness, seed).family;
}

namespace {

ConvexBody box_body(const std::string& name, const Vec& center, const Vec& halfwidth) {
  int d = static_cast<int>(center.size());
  ConvexBody body;
  body.name = name;
  for (int j = 0; j < d; ++j) {
    Vec e = zero_vec(d);
    e[j] = 1;
    body.halfspaces.push_back({e, center[j] + halfwidth[j]});
    body.halfspaces.push_back({scale(e, Rat(-1)), -(center[j] - halfwidth[j])});
  }
  return body;
}

}  // namespace

Family gen_random_pik(int n, int d, int k, std::uint64_t seed, int max_attempts) {
  if (n < 1 || d < 1 || k < 1) throw std::invalid_argument("gen_random_pik: bad sizes");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Family family;
    family.dimension = d;
    for (int i = 0; i < n; ++i) {
      Vec center(d), halfwidth(d);
      for (int j = 0; j < d; ++j) {
        center[j] = Rat(rand_in(rng, -8, 8));
        halfwidth[j] = make_rat(Int(rand_in(rng, 4, 12)), Int(2));
      }
      family.bodies.push_back(box_body("B" + std::to_string(i), center, halfwidth));
    }
    if (check_pik(family, k).holds) return family;
  }
  throw std::runtime_error("gen_random_pik: rejection cap exhausted");
}

Family gen_random_pik_violation(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_random_pik_violation: n >= 3");
  std::mt19937_64 rng(seed);
  // Three thickened triangle edges pairwise intersect but share no point;
  // every remaining body is a large box containing the whole construction,
  // so the planted triple is the only empty one.
  SimplexFacetInstance core = gen_simplex_facet_instance(2, make_rat(1, 10), rng());
  Family family = core.family;
  Rat reach = 1;
  for (const ConvexBody& body : family.bodies)
    for (const Vec& v : vertices(body))
      for (const Rat& c : v) reach = std::max(reach, Rat(abs(c)));
  for (int i = 3; i < n; ++i) {
    Vec center{Rat(rand_in(rng, -2, 2)), Rat(rand_in(rng, -2, 2))};
    Rat pad(rand_in(rng, 10, 30));
    Vec halfwidth{reach + pad, reach + pad};
    family.bodies.push_back(box_body("B" + std::to_string(i), center, halfwidth));
  }
  if (check_pik(family, 2).holds && !check_pik(family, 3).holds) return family;
  throw std::runtime_error("gen_random_pik_violation: construction failed");
}

Family gen_grid_instance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Family family;
    family.dimension = 2;
    for (int i = 0; i < n; ++i) {
      long w = rand_in(rng, 1, 4), h = rand_in(rng, 1, 4);
      long cx = rand_in(rng, -5, 5 - w), cy = rand_in(rng, -5, 5 - h);
      Vec lo{Rat(cx), Rat(cy)}, hi{Rat(cx + w), Rat(cy + h)};
      ConvexBody body;
      body.name = "R" + std::to_string(i);
      body.halfspaces = box_halfspaces(Box{lo, hi});
      family.bodies.push_back(std::move(body));
    }
    bool ok = true;
    for (const ConvexBody& body : family.bodies)
      if (!body_nonempty(body)) ok = false;
    if (ok) return family;
  }
  throw std::runtime_error("gen_grid_instance: construction failed");
}

Vec gen_grid_query(const Family& family, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Vec x{Rat(rand_in(rng, -7, 6)) + make_rat(1, 2), Rat(rand_in(rng, -7, 6)) + make_rat(1, 2)};
    bool inside = false;
    for (const ConvexBody& body : family.bodies)
      if (body.contains(x)) inside = true;
    if (!inside) return x;
  }
  throw std::runtime_error("gen_grid_query: no free half-integer point");
}

AffineMap random_invertible_affine(int d, std::mt19937_64& rng) {
  for (;;) {
    AffineMap map;
    map.matrix.assign(d, zero_vec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) map.matrix[i][j] = Rat(rand_in(rng, -3, 3));
    if (determinant(map.matrix) == 0) continue;
    map.translation.resize(d);
    for (int i = 0; i < d; ++i) map.translation[i] = Rat(rand_in(rng, -5, 5));
    return map;
  }
}

}  // namespace ccert
