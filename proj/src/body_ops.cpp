#include "ccert/body_ops.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ccert {

bool body_nonempty(const ConvexBody& body) {
  if (body.halfspaces.empty()) return true;
  return lp_feasible_point(body.dim(), constraints_of(body)).has_value();
}

bool is_bounded(const ConvexBody& body) {
  int d = body.dim();
  if (d < 0) return false;  // no constraints: whole space
  std::vector<LpConstraint> cons;
  for (const HalfSpace& h : body.halfspaces) cons.push_back({h.normal, Rat(0), false});
  for (int j = 0; j < d; ++j) {
    Vec e = zero_vec(d);
    e[j] = 1;
    cons.push_back({e, Rat(1), false});
    cons.push_back({scale(e, Rat(-1)), Rat(1), false});
  }
  for (int j = 0; j < d; ++j) {
    Vec obj = zero_vec(d);
    for (int s : {1, -1}) {
      obj[j] = s;
      LpResult r = solve_lp(d, obj, true, cons);
      if (r.status == LpStatus::optimal && r.value > 0) return false;
    }
  }
  return true;
}

namespace {

// Enumerates k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Vec> vertices(const ConvexBody& body) {
  int d = body.dim();
  std::vector<Vec> verts;
  if (d < 1) return verts;
  int f = static_cast<int>(body.halfspaces.size());
  if (f < d) return verts;
  for_each_subset(f, d, [&](const std::vector<int>& s) {
    Mat a;
    Vec b;
    for (int i : s) {
      a.push_back(body.halfspaces[i].normal);
      b.push_back(body.halfspaces[i].offset);
    }
    if (determinant(a) == 0) return;
    auto x = solve_linear(a, b);
    if (!x || !body.contains(*x)) return;
    if (std::find(verts.begin(), verts.end(), *x) == verts.end())
      verts.push_back(std::move(*x));
  });
  return verts;
}

Vec closest_point(const ConvexBody& body, const Vec& b) {
  int d = body.dim();
  if (d < 1) throw std::invalid_argument("closest_point: body has no constraints");
  if (static_cast<int>(b.size()) != d)
    throw std::invalid_argument("closest_point: dimension mismatch");
  if (!is_bounded(body))
    throw std::invalid_argument("closest_point: unbounded body; clip first");

  std::optional<Vec> best;
  Rat best_dist;
  int f = static_cast<int>(body.halfspaces.size());
  for (int k = 0; k <= std::min(f, d); ++k) {
    for_each_subset(f, k, [&](const std::vector<int>& s) {
      // KKT system for min |x-b|^2 subject to the active equalities:
      // x - A^T lambda = b,  A x = c.
      int n = d + k;
      Mat m(n, zero_vec(n));
      Vec rhs(n);
      for (int i = 0; i < d; ++i) {
        m[i][i] = 1;
        for (int j = 0; j < k; ++j) m[i][d + j] = -body.halfspaces[s[j]].normal[i];
        rhs[i] = b[i];
      }
      for (int j = 0; j < k; ++j) {
        for (int i = 0; i < d; ++i) m[d + j][i] = body.halfspaces[s[j]].normal[i];
        rhs[d + j] = body.halfspaces[s[j]].offset;
      }
      auto sol = solve_linear(m, rhs);
      if (!sol) return;
      Vec x(sol->begin(), sol->begin() + d);
      if (!body.contains(x)) return;
      Rat dist = norm_sq(sub(x, b));
      if (!best || dist < best_dist) {
        best = std::move(x);
        best_dist = dist;
      }
    });
  }
  if (!best) throw std::invalid_argument("closest_point: empty body");
  return *best;
}

HalfSpace support_halfspace(const ConvexBody& body, const Vec& b) {
  if (body.contains(b))
    throw std::invalid_argument("support_halfspace: point inside body");
  Vec q = closest_point(body, b);
  Vec n = sub(q, b);
  assert(!is_zero(n));
  // Body side: n . x >= n . q, stored as the <= half-space -n . x <= -n . q.
  return HalfSpace{scale(n, Rat(-1)), -dot(n, q)};
}

Mat orthogonal_complement(const Mat& directions, int dim) {
  if (directions.empty()) {
    Mat id(dim, zero_vec(dim));
    for (int i = 0; i < dim; ++i) id[i][i] = 1;
    return id;
  }
  if (rank(directions) != static_cast<int>(directions.size()))
    throw std::invalid_argument("rank-deficient direction set");
  Mat w = nullspace(directions);
  assert(static_cast<int>(w.size()) == dim - static_cast<int>(directions.size()));
  return w;
}

namespace {

struct FmRow {
  Vec coef;  // over (t, s) during elimination
  Rat rhs;
};

// Canonical scaling for dedupe: divide by the absolute value of the first
// nonzero coefficient (positive scaling preserves the half-space).
void normalize_row(FmRow& row) {
  for (const Rat& c : row.coef) {
    if (c != 0) {
      Rat f = abs(c);
      for (Rat& v : row.coef) v /= f;
      row.rhs /= f;
      return;
    }
  }
}

}  // namespace

ConvexBody project_body(const ConvexBody& body, const Mat& directions,
                        const Mat& complement) {
  [[maybe_unused]] int d = body.dim();
  int m = static_cast<int>(directions.size());
  int td = static_cast<int>(complement.size());
  assert(td + m == d || body.halfspaces.empty());

  // Substitute x = W^T t + D^T s into every constraint, then eliminate s.
  std::vector<FmRow> rows;
  for (const HalfSpace& h : body.halfspaces) {
    FmRow row;
    row.coef.resize(td + m);
    for (int i = 0; i < td; ++i) row.coef[i] = dot(h.normal, complement[i]);
    for (int j = 0; j < m; ++j) row.coef[td + j] = dot(h.normal, directions[j]);
    row.rhs = h.offset;
    rows.push_back(std::move(row));
  }

  bool infeasible = false;
  for (int v = td + m - 1; v >= td; --v) {
    std::vector<FmRow> keep, pos, neg;
    for (FmRow& row : rows) {
      int s = sign(row.coef[v]);
      if (s == 0)
        keep.push_back(std::move(row));
      else if (s > 0)
        pos.push_back(std::move(row));
      else
        neg.push_back(std::move(row));
    }
    for (const FmRow& p : pos) {
      for (const FmRow& n : neg) {
        FmRow combined;
        combined.coef.resize(v);
        Rat cp = p.coef[v], cn = -n.coef[v];
        for (int j = 0; j < v; ++j)
          combined.coef[j] = p.coef[j] * cn + n.coef[j] * cp;
        combined.rhs = p.rhs * cn + n.rhs * cp;
        keep.push_back(std::move(combined));
      }
    }
    for (FmRow& row : keep) row.coef.resize(v);
    rows = std::move(keep);
  }

  ConvexBody out;
  out.name = body.name;
  std::vector<FmRow> seen;
  for (FmRow& row : rows) {
    bool zero = true;
    for (const Rat& c : row.coef)
      if (c != 0) zero = false;
    if (zero) {
      if (row.rhs < 0) infeasible = true;
      continue;
    }
    normalize_row(row);
    bool dup = false;
    for (const FmRow& s : seen)
      if (s.coef == row.coef && s.rhs == row.rhs) dup = true;
    if (dup) continue;
    seen.push_back(row);
    out.halfspaces.push_back({row.coef, row.rhs});
  }
  if (infeasible) {
    Vec e = zero_vec(td);
    e[0] = 1;
    out.halfspaces.clear();
    out.halfspaces.push_back({e, Rat(0)});
    out.halfspaces.push_back({scale(e, Rat(-1)), Rat(-1)});
    return out;
  }
  return remove_redundant(out);
}

Vec project_point(const Vec& p, const Mat& directions, const Mat& complement) {
  int d = static_cast<int>(p.size());
  int td = static_cast<int>(complement.size());
  int m = static_cast<int>(directions.size());
  assert(td + m == d);
  // Solve W^T t + D^T s = p for (t, s); columns are the basis vectors.
  Mat a(d, zero_vec(td + m));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < td; ++j) a[i][j] = complement[j][i];
    for (int j = 0; j < m; ++j) a[i][td + j] = directions[j][i];
  }
  auto sol = solve_linear(a, p);
  assert(sol.has_value());  // the basis spans the space
  return Vec(sol->begin(), sol->begin() + td);
}

Vec lift_point(const Vec& t, const Mat& complement) {
  assert(t.size() == complement.size());
  Vec x = zero_vec(complement.empty() ? 0 : complement[0].size());
  for (std::size_t i = 0; i < t.size(); ++i) x = add(x, scale(complement[i], t[i]));
  return x;
}

std::vector<HalfSpace> box_halfspaces(const Box& box) {
  int d = box.dim();
  std::vector<HalfSpace> hs;
  for (int j = 0; j < d; ++j) {
    Vec e = zero_vec(d);
    e[j] = 1;
    hs.push_back({e, box.hi[j]});
    hs.push_back({scale(e, Rat(-1)), -box.lo[j]});
  }
  return hs;
}

ConvexBody clip_to_box(const ConvexBody& body, const Box& box) {
  ConvexBody out = body;
  for (HalfSpace& h : box_halfspaces(box)) out.halfspaces.push_back(std::move(h));
  return out;
}

Box default_clip_box(const Family& family, const std::vector<Vec>& extra_points) {
  int d = family.dimension;
  std::vector<Vec> pool = extra_points;
  for (const ConvexBody& body : family.bodies) {
    if (auto p = lp_feasible_point(d, constraints_of(body))) pool.push_back(*p);
    for (Vec& v : vertices(body)) pool.push_back(std::move(v));
  }
  for (int i = 0; i < family.size(); ++i) {
    for (int j = i + 1; j < family.size(); ++j) {
      std::vector<LpConstraint> cons = constraints_of(family.bodies[i]);
      append_constraints(cons, family.bodies[j]);
      if (auto p = lp_feasible_point(d, cons)) pool.push_back(*p);
    }
  }
  Box box;
  box.lo = Vec(d, Rat(-1));
  box.hi = Vec(d, Rat(1));
  if (pool.empty()) return box;
  for (int j = 0; j < d; ++j) box.lo[j] = box.hi[j] = pool[0][j];
  for (const Vec& p : pool) {
    for (int j = 0; j < d; ++j) {
      box.lo[j] = std::min(box.lo[j], p[j]);
      box.hi[j] = std::max(box.hi[j], p[j]);
    }
  }
  Rat max_w = 0;
  for (int j = 0; j < d; ++j) max_w = std::max(max_w, Rat(box.hi[j] - box.lo[j]));
  // Widen so any nearest-point foot from a pooled point lands inside: the
  // foot is within Euclidean distance diam of its source, bounded by
  // d * max_w in each coordinate.
  Rat margin = Rat(d) * max_w + 1;
  for (int j = 0; j < d; ++j) {
    Rat w = box.hi[j] - box.lo[j];
    box.lo[j] -= w / 2 + margin;
    box.hi[j] += w / 2 + margin;
  }
  return box;
}

Vec apply_affine(const AffineMap& t, const Vec& p) {
  return add(mat_apply(t.matrix, p), t.translation);
}

namespace {

Mat affine_inverse_matrix(const AffineMap& t) {
  auto inv = inverse(t.matrix);
  if (!inv) throw std::invalid_argument("apply_affine: singular matrix");
  return *inv;
}

HalfSpace transform_halfspace(const HalfSpace& h, const Mat& inv, const Vec& translation) {
  int d = h.dim();
  Vec n = zero_vec(d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) n[j] += h.normal[i] * inv[i][j];
  return HalfSpace{n, h.offset + dot(n, translation)};
}

}  // namespace

HalfSpace apply_affine(const AffineMap& t, const HalfSpace& h) {
  return transform_halfspace(h, affine_inverse_matrix(t), t.translation);
}

ConvexBody apply_affine(const AffineMap& t, const ConvexBody& body) {
  Mat inv = affine_inverse_matrix(t);
  ConvexBody out;
  out.name = body.name;
  for (const HalfSpace& h : body.halfspaces)
    out.halfspaces.push_back(transform_halfspace(h, inv, t.translation));
  return out;
}

Family apply_affine(const AffineMap& t, const Family& family) {
  Mat inv = affine_inverse_matrix(t);
  Family out;
  out.dimension = family.dimension;
  for (const ConvexBody& body : family.bodies) {
    ConvexBody b;
    b.name = body.name;
    for (const HalfSpace& h : body.halfspaces)
      b.halfspaces.push_back(transform_halfspace(h, inv, t.translation));
    out.bodies.push_back(std::move(b));
  }
  return out;
}

ConvexBody remove_redundant(const ConvexBody& body) {
  int d = body.dim();
  if (d < 1 || body.halfspaces.size() <= 1) return body;
  std::vector<HalfSpace> kept = body.halfspaces;
  std::size_t i = 0;
  while (i < kept.size() && kept.size() > 1) {
    std::vector<LpConstraint> cons;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) cons.push_back({kept[j].normal, kept[j].offset, false});
    LpResult r = solve_lp(d, kept[i].normal, true, cons);
    if (r.status == LpStatus::optimal && r.value <= kept[i].offset) {
      kept.erase(kept.begin() + i);
    } else {
      ++i;
    }
  }
  ConvexBody out;
  out.name = body.name;
  out.halfspaces = std::move(kept);
  return out;
}

}  // namespace ccert
