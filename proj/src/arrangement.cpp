#include "ccert/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ccert/errors.hpp"
#include "ccert/lp.hpp"

namespace ccert {

std::string sign_string(const SignVec& s) {
  std::string out;
  out.reserve(s.size());
  for (std::int8_t v : s) out.push_back(v < 0 ? '-' : (v > 0 ? '+' : '0'));
  return out;
}

SignVec sign_from_string(const std::string& s) {
  SignVec out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '-')
      out.push_back(-1);
    else if (c == '+')
      out.push_back(1);
    else if (c == '0')
      out.push_back(0);
    else
      throw std::invalid_argument("bad sign character");
  }
  return out;
}

Hyperplane canonical_hyperplane(const HalfSpace& h) {
  Hyperplane hp{h.normal, h.offset};
  for (const Rat& c : hp.normal) {
    if (c != 0) {
      Rat f = c;
      for (Rat& v : hp.normal) v /= f;
      hp.offset /= f;
      return hp;
    }
  }
  throw std::invalid_argument("zero normal in half-space");
}

std::vector<Hyperplane> collect_hyperplanes(const Family& family, int cap) {
  std::vector<Hyperplane> planes;
  for (const ConvexBody& body : family.bodies) {
    for (const HalfSpace& h : body.halfspaces) {
      Hyperplane hp = canonical_hyperplane(h);
      bool seen = false;
      for (const Hyperplane& q : planes)
        if (q.normal == hp.normal && q.offset == hp.offset) seen = true;
      if (!seen) planes.push_back(std::move(hp));
    }
  }
  if (static_cast<int>(planes.size()) > cap)
    throw CapExceeded("arrangement has " + std::to_string(planes.size()) +
                      " hyperplanes, cap is " + std::to_string(cap) +
                      " (raise --max-hyperplanes)");
  return planes;
}

SignProbe probe_sign(const std::vector<Hyperplane>& hyperplanes, const SignVec& sign,
                     int prefix_len, int dim) {
  // Variables (x, t); maximize t subject to the sign constraints with slack
  // t on the strict ones, t <= 1. Feasible iff the optimum is positive.
  std::vector<LpConstraint> cons;
  for (int i = 0; i < prefix_len; ++i) {
    const Hyperplane& h = hyperplanes[i];
    Vec a(h.normal);
    a.push_back(Rat(0));
    if (sign[i] == 0) {
      cons.push_back({a, h.offset, true});
    } else if (sign[i] < 0) {
      a[dim] = 1;  // a.x + t <= b
      cons.push_back({a, h.offset, false});
    } else {
      for (Rat& v : a) v = -v;
      a[dim] = 1;  // -a.x + t <= -b
      cons.push_back({a, -h.offset, false});
    }
  }
  {
    Vec tcap = zero_vec(dim + 1);
    tcap[dim] = 1;
    cons.push_back({tcap, Rat(1), false});
  }
  Vec obj = zero_vec(dim + 1);
  obj[dim] = 1;
  LpResult r = solve_lp(dim + 1, obj, true, cons);
  SignProbe probe;
  if (r.status != LpStatus::optimal || r.value <= 0) return probe;
  probe.feasible = true;
  probe.point = Vec(r.point.begin(), r.point.begin() + dim);
  probe.slack = r.value;
  return probe;
}

Vec cell_representative(const std::vector<Hyperplane>& hyperplanes, const SignVec& sign,
                        int dim) {
  SignProbe probe = probe_sign(hyperplanes, sign, static_cast<int>(sign.size()), dim);
  if (!probe.feasible) throw std::invalid_argument("infeasible sign vector");
  return probe.point;
}

namespace {

std::vector<LpConstraint> recession_constraints(const std::vector<Hyperplane>& hyperplanes,
                                                const SignVec& sign, int dim,
                                                bool with_box) {
  std::vector<LpConstraint> cons;
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    const Hyperplane& h = hyperplanes[i];
    if (sign[i] == 0) {
      cons.push_back({h.normal, Rat(0), true});
    } else if (sign[i] < 0) {
      cons.push_back({h.normal, Rat(0), false});
    } else {
      cons.push_back({scale(h.normal, Rat(-1)), Rat(0), false});
    }
  }
  if (with_box) {
    for (int j = 0; j < dim; ++j) {
      Vec e = zero_vec(dim);
      e[j] = 1;
      cons.push_back({e, Rat(1), false});
      cons.push_back({scale(e, Rat(-1)), Rat(1), false});
    }
  }
  return cons;
}

}  // namespace

bool cell_unbounded(const std::vector<Hyperplane>& hyperplanes, const SignVec& sign,
                    int dim) {
  std::vector<LpConstraint> cons = recession_constraints(hyperplanes, sign, dim, true);
  for (int j = 0; j < dim; ++j) {
    Vec obj = zero_vec(dim);
    for (int s : {1, -1}) {
      obj[j] = s;
      LpResult r = solve_lp(dim, obj, true, cons);
      if (r.status == LpStatus::optimal && r.value > 0) return true;
    }
  }
  return false;
}

bool cell_unbounded_maxnorm(const std::vector<Hyperplane>& hyperplanes,
                            const SignVec& sign, int dim) {
  // Optimize coordinates over the closure of the cell itself.
  std::vector<LpConstraint> cons;
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    const Hyperplane& h = hyperplanes[i];
    if (sign[i] == 0)
      cons.push_back({h.normal, h.offset, true});
    else if (sign[i] < 0)
      cons.push_back({h.normal, h.offset, false});
    else
      cons.push_back({scale(h.normal, Rat(-1)), -h.offset, false});
  }
  for (int j = 0; j < dim; ++j) {
    Vec obj = zero_vec(dim);
    for (int s : {1, -1}) {
      obj[j] = s;
      LpResult r = solve_lp(dim, obj, true, cons);
      if (r.status == LpStatus::unbounded) return true;
    }
  }
  return false;
}

SignVec CellComplex::sign_of(const Vec& p) const {
  SignVec s(hyperplanes.size());
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    Rat v = dot(hyperplanes[i].normal, p) - hyperplanes[i].offset;
    s[i] = static_cast<std::int8_t>(sign(v));
  }
  return s;
}

std::int32_t CellComplex::locate(const Vec& p) const {
  if (static_cast<int>(p.size()) != dim)
    throw std::invalid_argument("locate: dimension mismatch");
  auto it = index_.find(sign_string(sign_of(p)));
  assert(it != index_.end());  // the cells cover all of R^d
  return it->second;
}

// True when `lo` is a face of `hi`: extra zeros only, agreement elsewhere.
static bool face_of(const SignVec& lo, const SignVec& hi) {
  bool extra_zero = false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] == 0 && hi[i] != 0)
      extra_zero = true;
    else if (lo[i] != hi[i])
      return false;
  }
  return extra_zero;
}

CellComplex finalize_complex(int dim, std::vector<Hyperplane> hyperplanes,
                             std::vector<SignVec> signs, const Family& family,
                             Exec exec) {
  std::sort(signs.begin(), signs.end());
  CellComplex complex;
  complex.dim = dim;
  complex.hyperplanes = std::move(hyperplanes);
  complex.cells.resize(signs.size());
  if (family.size() > 64) throw CapExceeded("more than 64 bodies");

  par_for(exec, static_cast<std::int64_t>(signs.size()), [&](std::int64_t i) {
    Cell cell;
    cell.sign = signs[i];
    cell.representative = cell_representative(complex.hyperplanes, cell.sign, dim);
    cell.unbounded = cell_unbounded(complex.hyperplanes, cell.sign, dim);
    Mat zero_normals;
    for (std::size_t h = 0; h < cell.sign.size(); ++h)
      if (cell.sign[h] == 0) zero_normals.push_back(complex.hyperplanes[h].normal);
    cell.dim = dim - (zero_normals.empty() ? 0 : rank(zero_normals));
    for (int b = 0; b < family.size(); ++b)
      if (family.bodies[b].contains(cell.representative))
        cell.covered_mask |= std::uint64_t{1} << b;
    complex.cells[i] = std::move(cell);
  });

  complex.adjacency.assign(complex.cells.size(), {});
  for (std::size_t i = 0; i < complex.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < complex.cells.size(); ++j) {
      const SignVec& a = complex.cells[i].sign;
      const SignVec& b = complex.cells[j].sign;
      if (face_of(a, b) || face_of(b, a)) {
        complex.adjacency[i].push_back(static_cast<std::int32_t>(j));
        complex.adjacency[j].push_back(static_cast<std::int32_t>(i));
      }
    }
  }
  for (auto& adj : complex.adjacency) std::sort(adj.begin(), adj.end());

  for (std::size_t i = 0; i < complex.cells.size(); ++i)
    complex.index_[sign_string(complex.cells[i].sign)] = static_cast<std::int32_t>(i);
  return complex;
}

CellComplex build_arrangement(const Family& family, const ArrangementOptions& opts) {
  std::vector<Hyperplane> planes = collect_hyperplanes(family, opts.max_hyperplanes);
  int h = static_cast<int>(planes.size());
  int dim = family.dimension;

  // Level-synchronous prefix expansion: each feasible prefix of length L
  // spawns up to three candidates of length L+1, probed in parallel.
  std::vector<SignVec> frontier{SignVec{}};
  for (int level = 0; level < h; ++level) {
    std::vector<SignVec> candidates;
    candidates.reserve(frontier.size() * 3);
    for (const SignVec& prefix : frontier) {
      for (std::int8_t s : {std::int8_t{-1}, std::int8_t{0}, std::int8_t{1}}) {
        SignVec next = prefix;
        next.push_back(s);
        candidates.push_back(std::move(next));
      }
    }
    std::vector<char> feasible(candidates.size(), 0);
    par_for(opts.exec, static_cast<std::int64_t>(candidates.size()), [&](std::int64_t i) {
      feasible[i] = probe_sign(planes, candidates[i], level + 1, dim).feasible ? 1 : 0;
    });
    std::vector<SignVec> next;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (feasible[i]) next.push_back(std::move(candidates[i]));
    frontier = std::move(next);
  }
  return finalize_complex(dim, std::move(planes), std::move(frontier), family, opts.exec);
}

namespace {

void extend_prefix(const std::vector<Hyperplane>& planes, int dim, SignVec& prefix,
                   std::vector<SignVec>& out) {
  if (prefix.size() == planes.size()) {
    out.push_back(prefix);
    return;
  }
  for (std::int8_t s : {std::int8_t{-1}, std::int8_t{0}, std::int8_t{1}}) {
    prefix.push_back(s);
    if (probe_sign(planes, prefix, static_cast<int>(prefix.size()), dim).feasible)
      extend_prefix(planes, dim, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

CellComplex build_arrangement_serial(const Family& family, const ArrangementOptions& opts) {
  std::vector<Hyperplane> planes = collect_hyperplanes(family, opts.max_hyperplanes);
  std::vector<SignVec> signs;
  SignVec prefix;
  if (planes.empty())
    signs.push_back({});
  else
    extend_prefix(planes, family.dimension, prefix, signs);
  return finalize_complex(family.dimension, std::move(planes), std::move(signs), family,
                          Exec::serial);
}

std::vector<std::int32_t> blocked_cells(const CellComplex& complex, std::uint64_t mask) {
  std::vector<std::int32_t> out;
  for (std::size_t i = 0; i < complex.cells.size(); ++i)
    if (complex.cells[i].covered_mask & mask) out.push_back(static_cast<std::int32_t>(i));
  return out;
}

}  // namespace ccert
