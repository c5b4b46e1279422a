#include "ccert/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

#include "ccert/errors.hpp"
#include "ccert/lp.hpp"

namespace ccert {

std::uint64_t mask_of(const std::vector<int>& indices) {
  std::uint64_t m = 0;
  for (int i : indices) m |= std::uint64_t{1} << i;
  return m;
}

std::vector<int> indices_of(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (mask & (std::uint64_t{1} << i)) out.push_back(i);
  return out;
}

namespace {

template <typename F>
void for_each_subset(int n, int k, F&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
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

PikReport check_pik(const Family& family, int k, const PikOptions& opts) {
  if (k < 1) throw std::invalid_argument("check_pik: k must be >= 1");
  PikReport report;
  report.k = k;
  int n = family.size();
  report.k_effective = std::min(k, n);
  if (n == 0 || report.k_effective == 0) {
    report.holds = true;
    return report;
  }
  std::vector<std::vector<int>> subsets;
  for_each_subset(n, report.k_effective,
                  [&](const std::vector<int>& s) { subsets.push_back(s); });

  std::vector<std::optional<Vec>> found(subsets.size());
  par_for(opts.exec, static_cast<std::int64_t>(subsets.size()), [&](std::int64_t i) {
    std::vector<LpConstraint> cons;
    for (int b : subsets[i]) append_constraints(cons, family.bodies[b]);
    found[i] = lp_feasible_point(family.dimension, cons);
  });

  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (!found[i]) {
      report.holds = false;
      report.violating = subsets[i];
      report.witnesses.clear();
      return report;
    }
    report.witnesses.emplace_back(subsets[i], *found[i]);
  }
  report.holds = true;
  return report;
}

std::optional<Vec> helly_point(const Family& family) {
  if (family.bodies.empty()) return zero_vec(family.dimension);
  std::vector<LpConstraint> cons;
  for (const ConvexBody& body : family.bodies) append_constraints(cons, body);
  return lp_feasible_point(family.dimension, cons);
}

EscapeResult escape(const CellComplex& complex, const Vec& x, std::uint64_t avoid_mask) {
  EscapeResult result;
  result.avoided_mask = avoid_mask;
  std::int32_t start = complex.locate(x);
  if (complex.cells[start].covered_mask & avoid_mask) {
    result.start_blocked = true;
    result.blocking_body =
        indices_of(complex.cells[start].covered_mask & avoid_mask).front();
    return result;
  }
  std::vector<std::int32_t> parent(complex.cells.size(), -2);
  std::deque<std::int32_t> queue;
  parent[start] = -1;
  queue.push_back(start);
  std::vector<std::int32_t> visited;
  std::int32_t reached = -1;
  while (!queue.empty()) {
    std::int32_t c = queue.front();
    queue.pop_front();
    visited.push_back(c);
    if (complex.cells[c].unbounded) {
      reached = c;
      break;
    }
    for (std::int32_t nb : complex.adjacency[c]) {
      if (parent[nb] != -2) continue;
      if (complex.cells[nb].covered_mask & avoid_mask) continue;
      parent[nb] = c;
      queue.push_back(nb);
    }
  }
  if (reached >= 0) {
    result.escaped = true;
    for (std::int32_t c = reached; c != -1; c = parent[c]) result.path.push_back(c);
    std::reverse(result.path.begin(), result.path.end());
  } else {
    std::sort(visited.begin(), visited.end());
    result.component = std::move(visited);
  }
  return result;
}

DepthCertificate depth(const Family& family, const CellComplex& complex, const Vec& x,
                       const DepthOptions& opts) {
  DepthCertificate cert;
  cert.point = x;
  int n = family.size();
  for (int b = 0; b < n; ++b)
    if (family.bodies[b].contains(x)) cert.mandatory.push_back(b);

  std::vector<int> optional_bodies;
  for (int b = 0; b < n; ++b)
    if (!family.bodies[b].contains(x)) optional_bodies.push_back(b);

  std::uint64_t all_mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t mandatory_mask = mask_of(cert.mandatory);

  int m = static_cast<int>(cert.mandatory.size());
  for (int size = m; size <= n; ++size) {
    // Candidate hit sets of this size containing every mandatory body,
    // in lexicographic order of the optional part.
    std::vector<std::uint64_t> candidates;
    for_each_subset(static_cast<int>(optional_bodies.size()), size - m,
                    [&](const std::vector<int>& s) {
                      std::uint64_t g = mandatory_mask;
                      for (int i : s) g |= std::uint64_t{1} << optional_bodies[i];
                      candidates.push_back(g);
                    });
    std::vector<char> ok(candidates.size(), 0);
    if (opts.exec == Exec::parallel) {
      par_for(opts.exec, static_cast<std::int64_t>(candidates.size()), [&](std::int64_t i) {
        ok[i] = escape(complex, x, all_mask & ~candidates[i]).escaped ? 1 : 0;
      });
    } else {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        ok[i] = escape(complex, x, all_mask & ~candidates[i]).escaped ? 1 : 0;
        if (ok[i]) break;  // first success in canonical order is the answer
      }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!ok[i]) continue;
      cert.depth = size;
      cert.hit_set = indices_of(candidates[i]);
      cert.escape = escape(complex, x, all_mask & ~candidates[i]);
      return cert;
    }
    cert.lower_bound.push_back({size, static_cast<long>(candidates.size()), true});
  }
  // Unreachable: G = F always escapes (nothing is avoided).
  throw std::logic_error("depth: no hit set found");
}

SurroundVerdict surrounds(const Family& family, const CellComplex& complex,
                          const std::vector<int>& sub, const Vec& x) {
  SurroundVerdict verdict;
  verdict.subfamily = sub;
  verdict.point = x;
  verdict.size_flag = static_cast<int>(sub.size()) != complex.dim + 1;
  for (int b : sub) {
    if (family.bodies[b].contains(x)) {
      verdict.applicable = false;
      verdict.surrounded = false;
      verdict.evidence = SurroundEvidence::containment;
      verdict.containing_body = b;
      return verdict;
    }
  }
  verdict.escape = escape(complex, x, mask_of(sub));
  assert(!verdict.escape.start_blocked);
  if (verdict.escape.escaped) {
    verdict.surrounded = false;
    verdict.evidence = SurroundEvidence::escape;
  } else {
    verdict.surrounded = true;
    verdict.evidence = SurroundEvidence::component;
    for ([[maybe_unused]] std::int32_t c : verdict.escape.component)
      assert(!complex.cells[c].unbounded);
  }
  return verdict;
}

FlatSurroundVerdict surrounds_flat(const Family& family, const std::vector<int>& sub,
                                   const Flat& flat, const ArrangementOptions& opts) {
  int d = family.dimension;
  int m = flat.m();
  if (m < 0 || m >= d) throw std::invalid_argument("surrounds_flat: need 0 <= m < d");
  if (static_cast<int>(flat.basepoint.size()) != d)
    throw std::invalid_argument("surrounds_flat: flat dimension mismatch");

  FlatSurroundVerdict out;
  out.complement = orthogonal_complement(flat.directions, d);

  Family clipped;
  clipped.dimension = d;
  for (int b : sub) clipped.bodies.push_back(family.bodies[b]);
  bool any_unbounded = false;
  for (const ConvexBody& body : clipped.bodies)
    if (!is_bounded(body)) any_unbounded = true;
  if (any_unbounded) {
    Box box = default_clip_box(clipped, {flat.basepoint});
    for (ConvexBody& body : clipped.bodies)
      if (!is_bounded(body)) body = clip_to_box(body, box);
  }

  out.projected.dimension = d - m;
  for (const ConvexBody& body : clipped.bodies)
    out.projected.bodies.push_back(project_body(body, flat.directions, out.complement));
  out.projected_point = project_point(flat.basepoint, flat.directions, out.complement);

  ArrangementOptions arr_opts = opts;
  out.complex = build_arrangement(out.projected, arr_opts);
  std::vector<int> all(out.projected.size());
  for (int i = 0; i < out.projected.size(); ++i) all[i] = i;
  out.verdict = surrounds(out.projected, out.complex, all, out.projected_point);
  out.verdict.subfamily = sub;
  if (out.verdict.containing_body >= 0)
    out.verdict.containing_body = sub[out.verdict.containing_body];
  return out;
}

}  // namespace ccert
