#pragma once

#include <optional>
#include <vector>

#include "ccert/geometry.hpp"
#include "ccert/lp.hpp"

namespace ccert {

bool body_nonempty(const ConvexBody& body);

// Recession-cone test: true iff the body contains no direction of
// unboundedness. Decided by 2d exact LPs over the homogeneous system with a
// box normalization.
bool is_bounded(const ConvexBody& body);

// All vertices (basic feasible points of rank-d active sets), deduplicated,
// in deterministic order. Lower-dimensional or non-pointed bodies may have
// none.
std::vector<Vec> vertices(const ConvexBody& body);

// Euclidean-nearest point of `body` to `b` with exact coordinates, by
// enumerating active sets and solving each equality-constrained
// least-squares system exactly. Requires a nonempty bounded body.
Vec closest_point(const ConvexBody& body, const Vec& b);

// The half-space H with normal q-b through q = closest_point(body, b),
// oriented so that body is inside H and b is strictly outside. Requires
// b outside the body; the body must be bounded.
HalfSpace support_halfspace(const ConvexBody& body, const Vec& b);

// Basis (rows) of the orthogonal complement of the row span of
// `directions`; deterministic. Throws on a rank-deficient direction set.
Mat orthogonal_complement(const Mat& directions, int dim);

// Orthogonal projection of `body` along span(directions), expressed in
// coordinates over `complement` (rows; pass orthogonal_complement output).
// Computed by exact Fourier-Motzkin elimination; redundant constraints are
// removed.
ConvexBody project_body(const ConvexBody& body, const Mat& directions,
                        const Mat& complement);

// Coordinates of the orthogonal projection of p over the complement basis.
Vec project_point(const Vec& p, const Mat& directions, const Mat& complement);

// Lift complement coordinates back to ambient space.
Vec lift_point(const Vec& t, const Mat& complement);

ConvexBody clip_to_box(const ConvexBody& body, const Box& box);
std::vector<HalfSpace> box_halfspaces(const Box& box);

// Compact clip region: the bounding box of all body vertices, per-body
// feasible points, pairwise-intersection witnesses, and the given query
// points, widened by its own largest extent (at least doubling it) so that
// nearest-point feet from any pooled point stay inside.
Box default_clip_box(const Family& family, const std::vector<Vec>& extra_points);

Vec apply_affine(const AffineMap& t, const Vec& p);
HalfSpace apply_affine(const AffineMap& t, const HalfSpace& h);
ConvexBody apply_affine(const AffineMap& t, const ConvexBody& body);
Family apply_affine(const AffineMap& t, const Family& family);

// Drops constraints implied by the others (exact LP test); keeps the
// original relative order of the survivors.
ConvexBody remove_redundant(const ConvexBody& body);

}  // namespace ccert
