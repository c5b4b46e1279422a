#include "ccert/theorems.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "ccert/errors.hpp"
#include "ccert/lp.hpp"

namespace ccert {

bool is_prime_power(long r) {
  if (r < 1) return false;
  if (r == 1) return true;
  for (long p = 2; p * p <= r; ++p) {
    if (r % p) continue;
    while (r % p == 0) r /= p;
    return r == 1;
  }
  return true;  // r itself prime
}

namespace {

long prime_of(long r) {
  if (r <= 1) return 0;
  for (long p = 2; p * p <= r; ++p)
    if (r % p == 0) return p;
  return r;
}

}  // namespace

int required_depth(int n, int d) { return (n + d) / (d + 1); }

CentralPointReport central_point(const Family& family, const CellComplex& complex,
                                 const std::optional<Vec>& user_point,
                                 const CentralPointOptions& opts) {
  CentralPointReport report;
  report.n = family.size();
  report.required = required_depth(report.n, family.dimension);
  report.pi_d_holds = check_pik(family, family.dimension, {opts.exec}).holds;

  if (user_point) {
    report.best = depth(family, complex, *user_point, {opts.exec});
    report.best_cell = -1;
    report.cells_evaluated = 1;
  } else {
    std::size_t cells = complex.cells.size();
    std::vector<DepthCertificate> certs(cells);
    par_for(opts.exec, static_cast<std::int64_t>(cells), [&](std::int64_t i) {
      certs[i] = depth(family, complex, complex.cells[i].representative, {Exec::serial});
    });
    // Cells are sorted by sign vector, so the first maximum realizes the
    // lexicographically-least tie-break.
    std::size_t best = 0;
    for (std::size_t i = 1; i < cells; ++i)
      if (certs[i].depth > certs[best].depth) best = i;
    report.best = std::move(certs[best]);
    report.best_cell = static_cast<std::int32_t>(best);
    report.cells_evaluated = static_cast<long>(cells);
  }
  report.bound_met = report.best.depth >= report.required;
  return report;
}

namespace {

// Recursive assignment of bodies to r groups or "unused", groups opened in
// order to cut label symmetry. Bodies containing x are tried first so groups
// close with cheap containment verdicts before surround checks run.
struct PartitionSearcher {
  const Family& family;
  const CellComplex& complex;
  Vec x;
  int r;
  std::vector<int> order;
  std::vector<char> contains_x;
  std::map<std::uint64_t, bool> surround_memo;
  std::vector<std::uint64_t> group_mask;
  std::vector<int> group_containers;

  PartitionSearcher(const Family& f, const CellComplex& c, const Vec& point, int groups)
      : family(f), complex(c), x(point), r(groups) {
    contains_x.resize(family.size());
    for (int b = 0; b < family.size(); ++b)
      contains_x[b] = family.bodies[b].contains(x) ? 1 : 0;
    for (int b = 0; b < family.size(); ++b)
      if (contains_x[b]) order.push_back(b);
    for (int b = 0; b < family.size(); ++b)
      if (!contains_x[b]) order.push_back(b);
  }

  bool group_surrounds(std::uint64_t mask) {
    auto it = surround_memo.find(mask);
    if (it != surround_memo.end()) return it->second;
    SurroundVerdict v = surrounds(family, complex, indices_of(mask), x);
    bool ok = v.applicable && v.surrounded;
    surround_memo.emplace(mask, ok);
    return ok;
  }

  bool dfs(int pos, int opened) {
    int n = static_cast<int>(order.size());
    if (n - pos < r - opened) return false;
    if (pos == n) {
      if (opened != r) return false;
      for (int g = 0; g < r; ++g)
        if (group_containers[g] == 0 && !group_surrounds(group_mask[g])) return false;
      return true;
    }
    int body = order[pos];
    std::uint64_t bit = std::uint64_t{1} << body;
    for (int g = 0; g < std::min(opened + 1, r); ++g) {
      if (g == opened) group_mask.push_back(0), group_containers.push_back(0);
      group_mask[g] |= bit;
      group_containers[g] += contains_x[body];
      if (dfs(pos + 1, std::max(opened, g + 1))) return true;
      group_mask[g] &= ~bit;
      group_containers[g] -= contains_x[body];
      if (g == opened) group_mask.pop_back(), group_containers.pop_back();
    }
    return dfs(pos + 1, opened);  // leave the body unused
  }
};

PartitionCertificate assemble_certificate(PartitionSearcher& s) {
  PartitionCertificate cert;
  cert.point = s.x;
  cert.r = s.r;
  cert.r_is_prime_power = is_prime_power(s.r);
  for (int g = 0; g < s.r; ++g) {
    GroupVerdict verdict;
    verdict.bodies = indices_of(s.group_mask[g]);
    verdict.contains = s.group_containers[g] > 0;
    if (verdict.contains) {
      for (int b : verdict.bodies)
        if (s.contains_x[b]) {
          verdict.member = b;
          break;
        }
    } else {
      verdict.surround = surrounds(s.family, s.complex, verdict.bodies, s.x);
    }
    cert.groups.push_back(std::move(verdict));
  }
  return cert;
}

}  // namespace

PartitionSearchResult partition_for_point(const Family& family, const CellComplex& complex,
                                          int r, const Vec& x,
                                          const PartitionOptions& opts) {
  if (r < 1) throw std::invalid_argument("partition: r must be >= 1");
  if (family.size() > opts.max_bodies)
    throw CapExceeded("partition search over " + std::to_string(family.size()) +
                      " bodies, cap is " + std::to_string(opts.max_bodies) +
                      " (raise --max-bodies)");
  PartitionSearchResult result;
  result.points_tried = 1;
  PartitionSearcher searcher(family, complex, x, r);
  if (searcher.dfs(0, 0))
    result.certificate = assemble_certificate(searcher);
  else
    result.exhaustive = true;
  return result;
}

PartitionSearchResult dual_tverberg_partition(const Family& family,
                                              const CellComplex& complex, int r,
                                              const std::optional<Vec>& x,
                                              const PartitionOptions& opts) {
  if (x) return partition_for_point(family, complex, r, *x, opts);

  // Candidate points: cell representatives by decreasing depth (the proof
  // locates x through the depth structure), ties by cell order.
  std::size_t cells = complex.cells.size();
  std::vector<int> depths(cells);
  par_for(opts.exec, static_cast<std::int64_t>(cells), [&](std::int64_t i) {
    depths[i] = depth(family, complex, complex.cells[i].representative, {Exec::serial}).depth;
  });
  std::vector<std::size_t> by_depth(cells);
  for (std::size_t i = 0; i < cells; ++i) by_depth[i] = i;
  std::stable_sort(by_depth.begin(), by_depth.end(),
                   [&](std::size_t a, std::size_t b) { return depths[a] > depths[b]; });

  PartitionSearchResult result;
  bool all_exhaustive = true;
  for (std::size_t idx : by_depth) {
    PartitionSearchResult one =
        partition_for_point(family, complex, r, complex.cells[idx].representative, opts);
    ++result.points_tried;
    if (one.certificate) {
      result.certificate = std::move(one.certificate);
      result.exhaustive = false;
      return result;
    }
    all_exhaustive = all_exhaustive && one.exhaustive;
  }
  result.exhaustive = all_exhaustive;
  return result;
}

VerifyOutcome verify_partition(const Family& family, const CellComplex& complex,
                               const PartitionCertificate& cert) {
  if (cert.r < 1 || static_cast<int>(cert.groups.size()) != cert.r)
    return {false, "group count differs from r"};
  std::uint64_t seen = 0;
  for (const GroupVerdict& g : cert.groups) {
    if (g.bodies.empty()) return {false, "empty subfamily"};
    for (int b : g.bodies) {
      if (b < 0 || b >= family.size()) return {false, "body index out of range"};
      if (seen & (std::uint64_t{1} << b)) return {false, "disjointness"};
      seen |= std::uint64_t{1} << b;
    }
  }
  for (std::size_t i = 0; i < cert.groups.size(); ++i) {
    const GroupVerdict& g = cert.groups[i];
    if (g.contains) {
      if (g.member < 0 || std::find(g.bodies.begin(), g.bodies.end(), g.member) ==
                              g.bodies.end())
        return {false, "containment member not in subfamily"};
      if (!family.bodies[g.member].contains(cert.point))
        return {false, "claimed member does not contain x"};
    } else {
      SurroundVerdict v = surrounds(family, complex, g.bodies, cert.point);
      if (!v.applicable) return {false, "containment precludes surround"};
      if (!v.surrounded) return {false, "subfamily does not surround x"};
    }
  }
  DepthCertificate dc = depth(family, complex, cert.point);
  if (dc.depth < cert.r) return {false, "depth below r"};
  return {true, ""};
}

Lemma5Result lemma_surround_certificate(const Family& g, const Vec& b,
                                        const ArrangementOptions& opts) {
  int d = g.dimension;
  if (g.size() != d + 1)
    throw std::invalid_argument("lemma5: family must have exactly d+1 bodies");
  if (static_cast<int>(b.size()) != d)
    throw std::invalid_argument("lemma5: point dimension mismatch");

  Lemma5Result result;
  result.pi_d_holds = check_pik(g, d).holds;
  if (!result.pi_d_holds) {
    result.reason = "family lacks the d-intersection property";
    return result;
  }

  // Closest points need compact bodies; clip unbounded ones to a box wide
  // enough to contain every nearest-point foot.
  Family work = g;
  bool clipped = false;
  Box box;
  for (const ConvexBody& body : work.bodies)
    if (!is_bounded(body)) clipped = true;
  if (clipped) {
    box = default_clip_box(g, {b});
    for (ConvexBody& body : work.bodies)
      if (!is_bounded(body)) body = clip_to_box(body, box);
  }

  SimplexCertificate cert;
  cert.base = b;
  cert.clipped = clipped;
  cert.clip_box = box;
  for (const ConvexBody& body : work.bodies) {
    Vec q = closest_point(body, b);
    if (q == b) {
      result.reason = "base point lies inside " + body.name;
      return result;
    }
    cert.closest.push_back(std::move(q));
  }

  // Hypothesis: b strictly interior to conv{g_i}; equivalently the
  // barycentric coordinates exist and are all positive.
  {
    Mat a(d + 1, zero_vec(d + 1));
    Vec rhs(d + 1);
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i <= d; ++i) a[j][i] = cert.closest[i][j];
      rhs[j] = b[j];
    }
    for (int i = 0; i <= d; ++i) a[d][i] = 1;
    rhs[d] = 1;
    if (determinant(a) == 0) {
      result.reason = "closest points are affinely dependent";
      return result;
    }
    auto lambda = solve_linear(a, rhs);
    for (const Rat& l : *lambda) {
      if (l <= 0) {
        result.reason = "base point not interior to the hull of closest points";
        return result;
      }
    }
  }
  result.hypothesis_holds = true;

  // Simplex vertices from the d-wise intersections of the original bodies.
  for (int i = 0; i <= d; ++i) {
    std::vector<LpConstraint> cons;
    for (int j = 0; j <= d; ++j)
      if (j != i) append_constraints(cons, g.bodies[j]);
    auto xi = lp_feasible_point(d, cons);
    assert(xi.has_value());  // guaranteed by the d-intersection property
    cert.simplex.push_back(std::move(*xi));
  }

  // Certificate checks: every facet vertex lies in its body, and b is
  // strictly inside the simplex.
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      if (!g.bodies[i].contains(cert.simplex[j])) {
        result.reason = "facet containment failed";
        return result;
      }
    }
  }
  {
    Mat a(d + 1, zero_vec(d + 1));
    Vec rhs(d + 1);
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i <= d; ++i) a[j][i] = cert.simplex[i][j];
      rhs[j] = b[j];
    }
    for (int i = 0; i <= d; ++i) a[d][i] = 1;
    rhs[d] = 1;
    if (determinant(a) == 0) {
      result.reason = "simplex is degenerate";
      return result;
    }
    cert.barycentric = *solve_linear(a, rhs);
    for (const Rat& l : cert.barycentric) {
      if (l <= 0) {
        result.reason = "base point not interior to the simplex";
        return result;
      }
    }
  }

  // Independent route: the surround predicate over the arrangement.
  CellComplex complex = build_arrangement(work, opts);
  std::vector<int> all(work.size());
  for (int i = 0; i < work.size(); ++i) all[i] = i;
  SurroundVerdict v = surrounds(work, complex, all, b);
  cert.surround_cross_check = v.applicable && v.surrounded;
  result.certificate = std::move(cert);
  return result;
}

namespace {

Vec primitive_direction(const Vec& v) {
  Int lcm = 1;
  for (const Rat& c : v) lcm = ::lcm(lcm, c.get_den());
  std::vector<Int> ints;
  Int g = 0;
  for (const Rat& c : v) {
    Int scaled = c.get_num() * (lcm / c.get_den());
    g = gcd(g, scaled);
    ints.push_back(scaled);
  }
  assert(g != 0);
  int flip = 1;
  for (const Int& c : ints) {
    if (c != 0) {
      flip = c < 0 ? -1 : 1;
      break;
    }
  }
  Vec out;
  for (const Int& c : ints) out.push_back(Rat(flip * c / g));
  return out;
}

Vec cross3(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// Exact circular order on nonzero 2-vectors: upper half-plane first, then by
// clockwise-free cross-product comparison within a half.
bool angle_less(const Vec& a, const Vec& b) {
  auto half = [](const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Rat cross = a[0] * b[1] - a[1] * b[0];
  return cross > 0;
}

// Criticals plus one representative per open angular arc (sums of
// circularly-consecutive directions). Input: nonzero 2-D vectors.
std::vector<Vec> circular_candidates(const std::vector<Vec>& raw) {
  std::vector<Vec> dirs;
  for (const Vec& v : raw) {
    for (int s : {1, -1}) {
      Vec d = primitive_direction(scale(v, Rat(s)));
      if (s < 0)
        for (Rat& c : d) c = -c;  // keep true orientation, primitive scale
      if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
    }
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  std::vector<Vec> out = dirs;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Vec& u = dirs[i];
    const Vec& v = dirs[(i + 1) % dirs.size()];
    Vec mid = add(u, v);
    if (!is_zero(mid)) out.push_back(std::move(mid));
  }
  return out;
}

// Coordinates of m in the row span of basis (rows independent, m in span).
Vec span_coords(const Mat& basis, const Vec& m) {
  std::size_t d = m.size(), k = basis.size();
  Mat a(d, zero_vec(k));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
  auto sol = solve_linear(a, m);
  assert(sol.has_value());
  return *sol;
}

std::vector<Vec> tukey_candidate_directions(const std::vector<Vec>& points, const Vec& x) {
  [[maybe_unused]] int d = static_cast<int>(x.size());
  std::vector<Vec> normals;  // hyperplane normals in direction space, up to sign
  for (const Vec& p : points) {
    Vec v = sub(p, x);
    if (is_zero(v)) continue;
    Vec prim = primitive_direction(v);
    if (std::find(normals.begin(), normals.end(), prim) == normals.end())
      normals.push_back(std::move(prim));
  }
  std::vector<Vec> candidates;
  if (normals.empty()) return candidates;

  int r = rank(Mat(normals.begin(), normals.end()));
  if (r == 1) {
    candidates.push_back(normals[0]);
    candidates.push_back(scale(normals[0], Rat(-1)));
    return candidates;
  }
  if (r == 2) {
    // All counts depend only on the span component; reduce to the plane.
    Mat basis;
    basis.push_back(normals[0]);
    for (const Vec& m : normals) {
      Mat probe = basis;
      probe.push_back(m);
      if (rank(probe) == 2) {
        basis.push_back(m);
        break;
      }
    }
    std::vector<Vec> plane;
    for (const Vec& m : normals) plane.push_back(span_coords(basis, m));
    for (const Vec& u : circular_candidates(plane)) {
      Vec n = add(scale(basis[0], u[0]), scale(basis[1], u[1]));
      candidates.push_back(std::move(n));
    }
    return candidates;
  }

  // Full-rank 3-D case: every region's closure is pointed and touches an
  // extreme ray cut out by two of the planes. Around each such ray, reduce
  // the pencil of incident planes to a 2-D problem and perturb by an exact
  // epsilon small enough to keep all non-incident signs.
  assert(d == 3 && r == 3);
  for (const Vec& m : normals) {
    candidates.push_back(m);
    candidates.push_back(scale(m, Rat(-1)));
  }
  std::vector<Vec> rays;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      Vec c = cross3(normals[i], normals[j]);
      if (is_zero(c)) continue;
      Vec prim = primitive_direction(c);
      if (std::find(rays.begin(), rays.end(), prim) == rays.end())
        rays.push_back(std::move(prim));
    }
  }
  for (const Vec& ray : rays) {
    for (int s : {1, -1}) {
      Vec n0 = scale(ray, Rat(s));
      candidates.push_back(n0);
      std::vector<Vec> pencil, far;
      for (const Vec& m : normals)
        (dot(m, n0) == 0 ? pencil : far).push_back(m);
      if (pencil.size() < 2) continue;
      Mat basis = nullspace(Mat{n0});
      std::vector<Vec> plane;
      for (const Vec& m : pencil) plane.push_back(span_coords(basis, m));
      for (const Vec& u : circular_candidates(plane)) {
        Vec w = add(scale(basis[0], u[0]), scale(basis[1], u[1]));
        Rat eps = 1;
        for (const Vec& m : far) {
          Rat wm = dot(w, m);
          if (wm == 0) continue;
          Rat bound = abs(dot(n0, m)) / (2 * abs(wm));
          eps = std::min(eps, bound);
        }
        candidates.push_back(add(n0, scale(w, eps)));
      }
    }
  }
  return candidates;
}

}  // namespace

int tukey_depth(const std::vector<Vec>& points, const Vec& x) {
  int d = static_cast<int>(x.size());
  if (d < 1 || d > 3) throw std::invalid_argument("tukey_depth: supported d is 1..3");
  for (const Vec& p : points)
    if (static_cast<int>(p.size()) != d)
      throw std::invalid_argument("tukey_depth: dimension mismatch");
  std::vector<Vec> candidates = tukey_candidate_directions(points, x);
  int n = static_cast<int>(points.size());
  if (candidates.empty()) return n;  // every point coincides with x
  int best = n;
  for (const Vec& dir : candidates) {
    int count = 0;
    for (const Vec& p : points)
      if (dot(dir, sub(p, x)) >= 0) ++count;
    best = std::min(best, count);
  }
  return best;
}

TukeyReport discrete_central_point(const std::vector<Vec>& points,
                                   const TukeyOptions& opts) {
  if (points.empty()) throw std::invalid_argument("discrete_central_point: empty set");
  int d = static_cast<int>(points[0].size());
  if (d < 1 || d > 3)
    throw std::invalid_argument("discrete_central_point: supported d is 1..3");
  int n = static_cast<int>(points.size());

  std::set<Vec> candidate_set(points.begin(), points.end());
  if (d == 1) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        candidate_set.insert({(points[i][0] + points[j][0]) / 2});
  } else {
    // Hyperplanes spanned by point subsets; candidate points are their
    // d-wise intersections.
    std::vector<Hyperplane> planes;
    auto add_plane = [&](const Vec& normal, const Vec& through) {
      if (is_zero(normal)) return;
      Hyperplane h = canonical_hyperplane(HalfSpace{normal, dot(normal, through)});
      for (const Hyperplane& q : planes)
        if (q.normal == h.normal && q.offset == h.offset) return;
      planes.push_back(std::move(h));
    };
    if (d == 2) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Vec dir = sub(points[j], points[i]);
          if (is_zero(dir)) continue;
          add_plane({-dir[1], dir[0]}, points[i]);
        }
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            add_plane(cross3(sub(points[j], points[i]), sub(points[k], points[i])),
                      points[i]);
    }
    long combos = 1;
    int np = static_cast<int>(planes.size());
    for (int i = 0; i < d; ++i) combos = combos * std::max(np - i, 1) / (i + 1);
    if (combos > opts.max_candidates)
      throw CapExceeded("discrete_central_point: too many candidate intersections");
    std::vector<int> idx(d);
    std::vector<std::vector<int>> subsets;
    std::function<void(int, int)> rec = [&](int start, int depth_left) {
      if (depth_left == 0) {
        subsets.push_back(idx);
        return;
      }
      for (int i = start; i <= np - depth_left; ++i) {
        idx[d - depth_left] = i;
        rec(i + 1, depth_left - 1);
      }
    };
    if (np >= d) rec(0, d);
    for (const std::vector<int>& s : subsets) {
      Mat a;
      Vec b;
      for (int i : s) {
        a.push_back(planes[i].normal);
        b.push_back(planes[i].offset);
      }
      if (determinant(a) == 0) continue;
      candidate_set.insert(*solve_linear(a, b));
    }
  }

  std::vector<Vec> candidates(candidate_set.begin(), candidate_set.end());
  std::vector<int> depths(candidates.size());
  par_for(opts.exec, static_cast<std::int64_t>(candidates.size()), [&](std::int64_t i) {
    depths[i] = tukey_depth(points, candidates[i]);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (depths[i] > depths[best]) best = i;

  TukeyReport report;
  report.best = candidates[best];
  report.depth = depths[best];
  report.required = required_depth(n, d);
  report.bound_met = report.depth >= report.required;
  report.candidates_tried = static_cast<long>(candidates.size());
  return report;
}

Family replicate_family(const Family& family, int k) {
  if (k < 1) throw std::invalid_argument("replicate_family: k must be >= 1");
  Family out;
  out.dimension = family.dimension;
  for (const ConvexBody& body : family.bodies) {
    for (int i = 1; i <= k; ++i) {
      ConvexBody copy = body;
      copy.name = body.name + "#" + std::to_string(i);
      out.bodies.push_back(std::move(copy));
    }
  }
  return out;
}

namespace {

std::vector<Vec> direction_menu(const std::vector<Family>& families, int d,
                                const TransversalOptions& opts) {
  std::set<Vec> menu;
  std::vector<Vec> pool;
  for (const Family& f : families)
    for (const ConvexBody& body : f.bodies)
      for (Vec& v : vertices(body)) pool.push_back(std::move(v));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      Vec diff = sub(pool[j], pool[i]);
      if (is_zero(diff)) continue;
      Vec prim = primitive_direction(diff);
      menu.insert(prim);
      if (d == 2) menu.insert(primitive_direction(Vec{-prim[1], prim[0]}));
    }
  }
  int g = opts.grid_density;
  if (d == 2) {
    for (int a = -g; a <= g; ++a)
      for (int b = -g; b <= g; ++b) {
        if (a == 0 && b == 0) continue;
        menu.insert(primitive_direction(Vec{Rat(a), Rat(b)}));
      }
  } else {
    for (int a = -g; a <= g; ++a)
      for (int b = -g; b <= g; ++b)
        for (int c = -g; c <= g; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          menu.insert(primitive_direction(Vec{Rat(a), Rat(b), Rat(c)}));
        }
  }
  std::vector<Vec> out(menu.begin(), menu.end());
  if (static_cast<long>(out.size()) > opts.max_directions)
    throw CapExceeded("transversal direction menu exceeds cap");
  return out;
}

TransversalFamilyPart part_from_partition(const PartitionCertificate& cert) {
  TransversalFamilyPart part;
  part.r = cert.r;
  for (const GroupVerdict& g : cert.groups) {
    TransversalGroup group;
    group.bodies = g.bodies;
    group.intersects = g.contains;
    group.member = g.member;
    part.groups.push_back(std::move(group));
  }
  return part;
}

void fill_hypothesis_flags(TransversalCertificate& cert, int d, int m) {
  cert.m_zero = m == 0;
  cert.d_minus_m_even = (d - m) % 2 == 0;
  long prime = 0;
  bool same = true;
  for (int r : cert.r_values) {
    if (r == 1) continue;
    if (!is_prime_power(r)) {
      same = false;
      break;
    }
    long p = prime_of(r);
    if (prime == 0)
      prime = p;
    else if (prime != p)
      same = false;
  }
  cert.same_prime_power = same;
  cert.common_prime = same ? prime : 0;
  cert.p_is_2 = same && prime == 2;
}

}  // namespace

TransversalSearchResult transversal_search(const std::vector<Family>& families, int m,
                                           const TransversalOptions& opts) {
  if (static_cast<int>(families.size()) != m + 1)
    throw std::invalid_argument("transversal_search: need exactly m+1 families");
  int d = families[0].dimension;
  for (const Family& f : families)
    if (f.dimension != d)
      throw std::invalid_argument("transversal_search: mixed dimensions");

  TransversalSearchResult result;
  ArrangementOptions arr{opts.max_hyperplanes, opts.exec};
  PartitionOptions popts{opts.max_bodies, opts.exec};

  if (m == 0) {
    const Family& family = families[0];
    int r = required_depth(family.size(), d);
    CellComplex complex = build_arrangement(family, arr);
    PartitionSearchResult search = dual_tverberg_partition(family, complex, r, {}, popts);
    result.directions_tried = 0;
    if (!search.certificate) return result;
    TransversalCertificate cert;
    cert.flat.basepoint = search.certificate->point;
    cert.r_values = {r};
    cert.families.push_back(part_from_partition(*search.certificate));
    fill_hypothesis_flags(cert, d, m);
    result.certificate = std::move(cert);
    return result;
  }

  if (m != 1 || (d != 2 && d != 3))
    throw std::invalid_argument("transversal_search: supported sizes are m=0 and m=1 with d in {2,3}");

  // Compact working copies: clip unbounded bodies once, up front.
  std::vector<Family> work = families;
  for (Family& f : work) {
    Box box = default_clip_box(f, {});
    for (ConvexBody& body : f.bodies)
      if (!is_bounded(body)) body = clip_to_box(body, box);
  }

  std::vector<int> r_values;
  for (const Family& f : work) r_values.push_back(required_depth(f.size(), d - m));

  for (const Vec& dir : direction_menu(work, d, opts)) {
    ++result.directions_tried;
    Mat directions{dir};
    Mat complement = orthogonal_complement(directions, d);

    std::vector<Family> projected;
    Family combined;
    combined.dimension = d - m;
    for (const Family& f : work) {
      Family pf;
      pf.dimension = d - m;
      for (const ConvexBody& body : f.bodies) {
        pf.bodies.push_back(project_body(body, directions, complement));
        combined.bodies.push_back(pf.bodies.back());
      }
      projected.push_back(std::move(pf));
    }
    CellComplex combined_complex = build_arrangement(combined, arr);
    std::vector<CellComplex> complexes;
    for (const Family& pf : projected) complexes.push_back(build_arrangement(pf, arr));

    for (const Cell& cell : combined_complex.cells) {
      const Vec& t = cell.representative;
      std::vector<PartitionCertificate> parts;
      bool ok = true;
      for (std::size_t i = 0; i < projected.size() && ok; ++i) {
        PartitionSearchResult one =
            partition_for_point(projected[i], complexes[i], r_values[i], t, popts);
        if (one.certificate)
          parts.push_back(std::move(*one.certificate));
        else
          ok = false;
      }
      if (!ok) continue;
      TransversalCertificate cert;
      cert.flat.basepoint = lift_point(t, complement);
      cert.flat.directions = directions;
      cert.r_values = r_values;
      for (const PartitionCertificate& p : parts)
        cert.families.push_back(part_from_partition(p));
      fill_hypothesis_flags(cert, d, m);
      result.certificate = std::move(cert);
      return result;
    }
  }
  return result;
}

}  // namespace ccert
