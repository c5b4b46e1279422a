#pragma once

#include <cstdint>
#include <random>

#include "ccert/geometry.hpp"

namespace ccert {

// All generators are deterministic in their seed and verify their advertised
// intersection property exactly before returning.

// n lines in the plane, pairwise non-parallel, no three concurrent.
Family gen_lines_general_position(int n, std::uint64_t seed);

// n distinct lines through a common point.
Family gen_concurrent_lines(int n, const Vec& point);

struct SimplexFacetInstance {
  Family family;
  Vec base_point;  // exact incenter for d = 2, centroid for d = 3
  Rat thickness_used;
};

// Thickened facets of a d-simplex with all side lengths rational (a scaled,
// optionally rotated and translated right triangle for d = 2). Verified
// Pi_d true and Pi_{d+1} false; the thickness is halved until both hold.
SimplexFacetInstance gen_simplex_facet_instance(int d, const Rat& thickness,
                                                std::uint64_t seed = 0);
Family gen_simplex_facet_bodies(int d, const Rat& thickness, std::uint64_t seed = 0);

// Random compact axis-box family with Pi_k verified by rejection sampling
// (up to `max_attempts` redraws).
Family gen_random_pik(int n, int d, int k, std::uint64_t seed, int max_attempts = 1000);

// Random compact family in the plane with a planted violating triple: the
// first three bodies pairwise intersect but share no point, and every other
// triple has a common point.
Family gen_random_pik_violation(int n, std::uint64_t seed);

// Integer-lattice instance for grid-oracle comparisons: fat axis-aligned
// rectangles whose feature coordinates are integers, so every corridor and
// body thickness is at least 1.
Family gen_grid_instance(int n, std::uint64_t seed);

// Half-integer query point outside every body of a grid instance.
Vec gen_grid_query(const Family& family, std::uint64_t seed);

AffineMap random_invertible_affine(int d, std::mt19937_64& rng);

}  // namespace ccert
