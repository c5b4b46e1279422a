#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ccert/arrangement.hpp"
#include "ccert/body_ops.hpp"
#include "ccert/geometry.hpp"

namespace ccert {

std::uint64_t mask_of(const std::vector<int>& indices);
std::vector<int> indices_of(std::uint64_t mask);

struct PikOptions {
  Exec exec = Exec::parallel;
};

struct PikReport {
  int k = 0;            // requested
  int k_effective = 0;  // min(k, |F|): smaller subfamilies follow by monotonicity
  bool holds = false;
  // One witness per checked subfamily (on success).
  std::vector<std::pair<std::vector<int>, Vec>> witnesses;
  std::vector<int> violating;  // first violating subfamily (on failure)
};

PikReport check_pik(const Family& family, int k, const PikOptions& opts = {});

// Common point of all bodies, or nullopt. For an empty family the origin.
std::optional<Vec> helly_point(const Family& family);

struct EscapeResult {
  bool start_blocked = false;  // the start point lies inside an avoided body
  int blocking_body = -1;
  bool escaped = false;
  std::uint64_t avoided_mask = 0;
  // Face-adjacent cell chain from the start cell to an unbounded cell.
  std::vector<std::int32_t> path;
  // When no escape exists: every reachable unblocked cell (all bounded).
  std::vector<std::int32_t> component;
};

// Breadth-first search over unblocked cells via face adjacency.
EscapeResult escape(const CellComplex& complex, const Vec& x, std::uint64_t avoid_mask);

struct DepthTranscriptEntry {
  int size = 0;
  long candidates = 0;  // subsets of this size containing the mandatory set
  bool all_failed = true;
};

struct DepthCertificate {
  Vec point;
  int depth = 0;
  std::vector<int> hit_set;    // minimal G whose removal frees an escape
  std::vector<int> mandatory;  // bodies containing the point
  EscapeResult escape;         // escape avoiding F \ hit_set
  std::vector<DepthTranscriptEntry> lower_bound;  // sizes < depth, all failed
};

struct DepthOptions {
  Exec exec = Exec::parallel;
};

// Exact dual depth: min |G| such that x escapes to infinity avoiding F \ G,
// by subset enumeration in increasing size seeded with the mandatory
// members.
DepthCertificate depth(const Family& family, const CellComplex& complex, const Vec& x,
                       const DepthOptions& opts = {});

enum class SurroundEvidence { containment, escape, component };

struct SurroundVerdict {
  std::vector<int> subfamily;
  Vec point;
  bool applicable = true;  // false when the point lies in the union
  bool surrounded = false;
  SurroundEvidence evidence = SurroundEvidence::escape;
  int containing_body = -1;  // evidence for the inapplicable case
  EscapeResult escape;       // escape or component evidence
  bool size_flag = false;    // subfamily size differs from dim+1 (noted only)
};

SurroundVerdict surrounds(const Family& family, const CellComplex& complex,
                          const std::vector<int>& sub, const Vec& x);

struct FlatSurroundVerdict {
  SurroundVerdict verdict;  // in the projected space, subfamily = original indices
  Vec projected_point;      // pi(L) in complement coordinates
  Mat complement;           // basis rows of the projected space
  Family projected;         // projected subfamily, one body per sub index
  CellComplex complex;      // arrangement of the projected subfamily
};

// Projects the subfamily along the flat's directions, projects the flat to a
// point, and delegates to `surrounds` in dimension d - m. Unbounded bodies
// are clipped to the default box first.
FlatSurroundVerdict surrounds_flat(const Family& family, const std::vector<int>& sub,
                                   const Flat& flat, const ArrangementOptions& opts = {});

}  // namespace ccert
