#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccert/analysis.hpp"

namespace ccert {

bool is_prime_power(long r);  // 1 counts as p^0

// ceil(n / (d+1)), the bound of the dual central point theorem.
int required_depth(int n, int d);

struct CentralPointReport {
  int n = 0;
  int required = 0;  // ceil(n / (d+1))
  bool pi_d_holds = false;
  bool bound_met = false;
  DepthCertificate best;
  std::int32_t best_cell = -1;  // -1 when evaluated at a user point
  long cells_evaluated = 0;
};

struct CentralPointOptions {
  Exec exec = Exec::parallel;
};

// Evaluates dual depth at the representative of every cell and returns the
// maximizer (ties: lexicographically least sign vector); with `user_point`
// set, evaluates there instead of sweeping.
CentralPointReport central_point(const Family& family, const CellComplex& complex,
                                 const std::optional<Vec>& user_point = std::nullopt,
                                 const CentralPointOptions& opts = {});

struct GroupVerdict {
  std::vector<int> bodies;
  bool contains = false;  // some member contains the point / intersects the flat
  int member = -1;        // witness body for the contains case
  SurroundVerdict surround;
};

struct PartitionCertificate {
  Vec point;
  int r = 0;
  bool r_is_prime_power = false;
  std::vector<GroupVerdict> groups;
};

struct PartitionOptions {
  int max_bodies = 9;
  Exec exec = Exec::parallel;
};

struct PartitionSearchResult {
  std::optional<PartitionCertificate> certificate;
  // With no certificate: true only when every candidate point and every
  // assignment was enumerated, distinguishing "none found" from exhaustion.
  bool exhaustive = false;
  long points_tried = 0;
};

// Partition search at one fixed point.
PartitionSearchResult partition_for_point(const Family& family, const CellComplex& complex,
                                          int r, const Vec& x,
                                          const PartitionOptions& opts = {});

// Full search: candidate points are all cell representatives ordered by
// decreasing depth (ties by sign vector).
PartitionSearchResult dual_tverberg_partition(const Family& family,
                                              const CellComplex& complex, int r,
                                              const std::optional<Vec>& x = std::nullopt,
                                              const PartitionOptions& opts = {});

struct VerifyOutcome {
  bool ok = false;
  std::string failing_check;  // first failing check, empty when ok
};

// Re-checks a partition certificate from scratch: disjointness,
// nonemptiness, every verdict, and the implied bound depth(x) >= r.
VerifyOutcome verify_partition(const Family& family, const CellComplex& complex,
                               const PartitionCertificate& cert);

struct SimplexCertificate {
  Vec base;                   // b
  std::vector<Vec> closest;   // g_i = closest point of G_i to b
  std::vector<Vec> simplex;   // x_i in the intersection of all G_j, j != i
  Vec barycentric;            // coordinates of b in the simplex, all positive
  bool surround_cross_check = false;  // independent surrounds(G, b) result
  bool clipped = false;
  Box clip_box;
};

struct Lemma5Result {
  bool pi_d_holds = false;
  bool hypothesis_holds = false;  // b interior to conv{g_i}
  std::optional<SimplexCertificate> certificate;
  std::string reason;  // explanation when no certificate is produced
};

// Constructive surround certificate: closest points g_i, hypothesis check,
// simplex vertices from the d-wise intersections, and an independent
// surround cross-check. The family must have exactly d+1 bodies.
Lemma5Result lemma_surround_certificate(const Family& g, const Vec& b,
                                        const ArrangementOptions& opts = {});

struct TransversalGroup {
  std::vector<int> bodies;
  bool intersects = false;  // some member intersects the flat
  int member = -1;
};

struct TransversalFamilyPart {
  int r = 0;
  std::vector<TransversalGroup> groups;
};

struct TransversalCertificate {
  Flat flat;
  std::vector<TransversalFamilyPart> families;
  std::vector<int> r_values;
  bool same_prime_power = false;  // all r_i powers of one prime
  long common_prime = 0;
  bool p_is_2 = false;
  bool d_minus_m_even = false;
  bool m_zero = false;
};

struct TransversalOptions {
  int max_bodies = 9;
  int max_hyperplanes = 14;
  int grid_density = 4;       // Farey-style direction grid bound
  long max_directions = 5000;
  Exec exec = Exec::parallel;
};

struct TransversalSearchResult {
  std::optional<TransversalCertificate> certificate;
  long directions_tried = 0;
};

// Heuristic search over a finite direction menu (vertex differences, their
// perpendiculars in the plane, and a rational grid) with exact verification
// of any found flat. Supported: m = 0 (reduces to the partition search) and
// m = 1 with d in {2, 3}. "None found" is never a refutation.
TransversalSearchResult transversal_search(const std::vector<Family>& families, int m,
                                           const TransversalOptions& opts = {});

// Minimum number of points in a closed half-space containing x, exact over
// a complete set of critical directions. Supports d in {1, 2, 3}.
int tukey_depth(const std::vector<Vec>& points, const Vec& x);

struct TukeyReport {
  Vec best;
  int depth = 0;
  int required = 0;  // ceil(n / (d+1))
  bool bound_met = false;
  long candidates_tried = 0;
};

struct TukeyOptions {
  long max_candidates = 200000;
  Exec exec = Exec::parallel;
};

// Maximizes Tukey depth over the points themselves plus all intersections of
// hyperplanes spanned by the set (pair midpoints in dimension 1).
TukeyReport discrete_central_point(const std::vector<Vec>& points,
                                   const TukeyOptions& opts = {});

// Each body repeated k times with suffixed names.
Family replicate_family(const Family& family, int k);

}  // namespace ccert
