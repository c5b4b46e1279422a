#include "ccert/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace ccert {

namespace {

// Dense simplex tableau in standard form: minimize cost . z subject to
// A z = b, z >= 0, with b kept nonnegative by the pivot rule.
struct Tableau {
  int rows = 0;
  int cols = 0;  // structural columns, RHS held separately
  Mat a;
  Vec b;
  Vec cost;
  std::vector<int> basis;     // basic column per row
  int artificial_start = 0;   // columns >= this may never re-enter

  void pivot(int r, int c) {
    Rat piv = a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] /= piv;
    b[r] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    if (cost[c] != 0) {
      Rat f = cost[c];
      for (int j = 0; j < cols; ++j) cost[j] -= f * a[r][j];
    }
    basis[r] = c;
  }

  // Subtract basic rows so reduced costs of basic columns are zero.
  void price_out() {
    for (int i = 0; i < rows; ++i) {
      if (cost[basis[i]] == 0) continue;
      Rat f = cost[basis[i]];
      for (int j = 0; j < cols; ++j) cost[j] -= f * a[i][j];
    }
  }

  // Bland's rule: entering = least column with negative reduced cost;
  // leaving = min ratio, ties by least basic variable index.
  LpStatus iterate() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < artificial_start; ++j) {
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::optimal;
      int leave = -1;
      Rat best_ratio;
      for (int i = 0; i < rows; ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = b[i] / a[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return LpStatus::unbounded;
      pivot(leave, enter);
    }
  }

  Rat column_value(int c) const {
    for (int i = 0; i < rows; ++i)
      if (basis[i] == c) return b[i];
    return Rat(0);
  }
};

}  // namespace

LpResult solve_lp(int dim, const Vec& objective, bool maximize,
                  const std::vector<LpConstraint>& constraints) {
  assert(dim >= 1);
  assert(objective.empty() || static_cast<int>(objective.size()) == dim);
  for (const LpConstraint& c : constraints)
    if (static_cast<int>(c.a.size()) != dim)
      throw std::invalid_argument("lp constraint dimension mismatch");

  int m = static_cast<int>(constraints.size());
  int slacks = 0;
  for (const LpConstraint& c : constraints)
    if (!c.equality) ++slacks;

  Tableau t;
  t.rows = m;
  t.artificial_start = 2 * dim + slacks;
  t.cols = t.artificial_start + m;
  t.a.assign(m, zero_vec(t.cols));
  t.b.assign(m, Rat(0));
  t.cost.assign(t.cols, Rat(0));
  t.basis.assign(m, 0);

  int slack_idx = 0;
  for (int i = 0; i < m; ++i) {
    const LpConstraint& c = constraints[i];
    Rat s = c.b < 0 ? Rat(-1) : Rat(1);
    for (int j = 0; j < dim; ++j) {
      t.a[i][j] = s * c.a[j];
      t.a[i][dim + j] = -s * c.a[j];
    }
    if (!c.equality) t.a[i][2 * dim + slack_idx++] = s;
    t.a[i][t.artificial_start + i] = 1;
    t.b[i] = s * c.b;
    t.basis[i] = t.artificial_start + i;
  }

  // Phase 1: minimize the sum of artificials.
  for (int j = t.artificial_start; j < t.cols; ++j) t.cost[j] = 1;
  t.price_out();
  {
    // Artificials may not re-enter but must be allowed to pivot during
    // phase 1, so widen the entering range temporarily.
    int saved = t.artificial_start;
    t.artificial_start = t.cols;
    LpStatus st = t.iterate();
    t.artificial_start = saved;
    assert(st == LpStatus::optimal);  // phase-1 objective is bounded below by 0
    (void)st;
  }
  Rat phase1 = 0;
  for (int i = 0; i < m; ++i)
    if (t.basis[i] >= t.artificial_start) phase1 += t.b[i];
  if (phase1 > 0) return {LpStatus::infeasible, {}, Rat(0)};

  // Drive remaining zero-valued artificials out of the basis; a row with no
  // structural pivot is a redundant constraint and stays put harmlessly
  // because its artificial is fixed at zero and can never re-enter.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < t.artificial_start) continue;
    for (int j = 0; j < t.artificial_start; ++j) {
      if (t.a[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2.
  t.cost.assign(t.cols, Rat(0));
  for (int j = 0; j < dim && !objective.empty(); ++j) {
    Rat c = maximize ? -objective[j] : objective[j];
    t.cost[j] = c;
    t.cost[dim + j] = -c;
  }
  t.price_out();
  LpStatus st = t.iterate();
  if (st == LpStatus::unbounded) return {LpStatus::unbounded, {}, Rat(0)};

  Vec x(dim);
  for (int j = 0; j < dim; ++j)
    x[j] = t.column_value(j) - t.column_value(dim + j);
  Rat value = objective.empty() ? Rat(0) : dot(objective, x);
  return {LpStatus::optimal, std::move(x), value};
}

std::optional<Vec> lp_feasible_point(int dim,
                                     const std::vector<LpConstraint>& constraints) {
  LpResult r = solve_lp(dim, {}, false, constraints);
  if (r.status != LpStatus::optimal) return std::nullopt;
  return r.point;
}

std::optional<Vec> lp_feasible(const std::vector<HalfSpace>& halfspaces,
                               const std::vector<HalfSpace>& equalities) {
  int dim = -1;
  std::vector<LpConstraint> cons;
  for (const HalfSpace& h : halfspaces) {
    if (dim < 0) dim = h.dim();
    if (h.dim() != dim) throw std::invalid_argument("halfspace dimension mismatch");
    cons.push_back({h.normal, h.offset, false});
  }
  for (const HalfSpace& h : equalities) {
    if (dim < 0) dim = h.dim();
    if (h.dim() != dim) throw std::invalid_argument("halfspace dimension mismatch");
    cons.push_back({h.normal, h.offset, true});
  }
  if (dim < 0) throw std::invalid_argument("lp_feasible with no constraints");
  return lp_feasible_point(dim, cons);
}

std::vector<LpConstraint> constraints_of(const ConvexBody& body) {
  std::vector<LpConstraint> cons;
  append_constraints(cons, body);
  return cons;
}

void append_constraints(std::vector<LpConstraint>& out, const ConvexBody& body) {
  for (const HalfSpace& h : body.halfspaces) out.push_back({h.normal, h.offset, false});
}

}  // namespace ccert
