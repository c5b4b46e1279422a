#pragma once

#include <optional>
#include <vector>

#include "ccert/geometry.hpp"
#include "ccert/linalg.hpp"

namespace ccert {

enum class LpStatus { optimal, infeasible, unbounded };

// a . x <= b, or a . x == b when equality is set.
struct LpConstraint {
  Vec a;
  Rat b;
  bool equality = false;
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Vec point;  // optimal (or feasible) point when status == optimal
  Rat value;  // objective value at `point`
};

// Exact two-phase simplex with Bland's rule; terminates on every input and
// never rounds. Free variables are split into nonnegative pairs internally.
LpResult solve_lp(int dim, const Vec& objective, bool maximize,
                  const std::vector<LpConstraint>& constraints);

// Feasibility-only entry point (phase 1 alone): an exact point satisfying
// every constraint, or nullopt.
std::optional<Vec> lp_feasible_point(int dim,
                                     const std::vector<LpConstraint>& constraints);

// The spec-level operation: inequalities plus half-spaces interpreted as
// equalities. Throws std::invalid_argument on dimension mismatch.
std::optional<Vec> lp_feasible(const std::vector<HalfSpace>& halfspaces,
                               const std::vector<HalfSpace>& equalities = {});

std::vector<LpConstraint> constraints_of(const ConvexBody& body);
void append_constraints(std::vector<LpConstraint>& out, const ConvexBody& body);

}  // namespace ccert
