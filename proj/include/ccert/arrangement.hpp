#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccert/geometry.hpp"
#include "ccert/parallel.hpp"

namespace ccert {

// Oriented hyperplane a . x = b in canonical form: the first nonzero normal
// coefficient equals 1, so scalar multiples of the same facet collapse.
struct Hyperplane {
  Vec normal;
  Rat offset;
};

// Per-hyperplane position: -1 (a.x < b), 0 (a.x = b), +1 (a.x > b).
using SignVec = std::vector<std::int8_t>;

std::string sign_string(const SignVec& s);
SignVec sign_from_string(const std::string& s);

struct Cell {
  SignVec sign;
  Vec representative;       // relative-interior point, exact
  bool unbounded = false;
  int dim = 0;              // affine dimension of the cell
  std::uint64_t covered_mask = 0;  // bodies containing the whole cell
};

struct ArrangementOptions {
  int max_hyperplanes = 14;
  Exec exec = Exec::parallel;
};

// The full face complex of the arrangement of every facet hyperplane of a
// family: all nonempty sign-vector cells of every dimension, with
// face-incidence adjacency. Immutable once built; queries are pure.
struct CellComplex {
  int dim = 0;
  std::vector<Hyperplane> hyperplanes;
  std::vector<Cell> cells;  // sorted lexicographically by sign vector
  std::vector<std::vector<std::int32_t>> adjacency;  // face incidence, symmetric

  SignVec sign_of(const Vec& p) const;
  // Index of the unique cell whose sign vector p realizes.
  std::int32_t locate(const Vec& p) const;

 private:
  friend CellComplex finalize_complex(int dim, std::vector<Hyperplane> hyperplanes,
                                      std::vector<SignVec> signs, const Family& family,
                                      Exec exec);
  std::unordered_map<std::string, std::int32_t> index_;
};

// Assembles a complex from enumerated sign vectors: representatives,
// unboundedness flags, dimensions, coverage masks, adjacency, locate index.
CellComplex finalize_complex(int dim, std::vector<Hyperplane> hyperplanes,
                             std::vector<SignVec> signs, const Family& family, Exec exec);

Hyperplane canonical_hyperplane(const HalfSpace& h);
std::vector<Hyperplane> collect_hyperplanes(const Family& family, int cap);

// Max-min-slack feasibility of a (prefix of a) sign vector: satisfiable with
// all strict signs holding with positive slack. On success the point
// attaining the optimal slack is returned.
struct SignProbe {
  bool feasible = false;
  Vec point;
  Rat slack;  // optimum of the max-min-slack LP, capped at 1
};
SignProbe probe_sign(const std::vector<Hyperplane>& hyperplanes, const SignVec& sign,
                     int prefix_len, int dim);

// Relative-interior representative of a feasible sign vector. Throws
// std::invalid_argument on an infeasible one.
Vec cell_representative(const std::vector<Hyperplane>& hyperplanes, const SignVec& sign,
                        int dim);

// Recession-cone route: the closure of the cell contains a nonzero ray.
bool cell_unbounded(const std::vector<Hyperplane>& hyperplanes, const SignVec& sign,
                    int dim);
// Independent route for cross-checks: some coordinate LP over the closure is
// unbounded.
bool cell_unbounded_maxnorm(const std::vector<Hyperplane>& hyperplanes,
                            const SignVec& sign, int dim);

// Level-synchronous enumeration with LP pruning; inner feasibility probes run
// in parallel under opts.exec.
CellComplex build_arrangement(const Family& family, const ArrangementOptions& opts = {});

// Reference implementation: depth-first prefix extension, single-threaded.
// Kept for testing; must agree with build_arrangement cell for cell.
CellComplex build_arrangement_serial(const Family& family,
                                     const ArrangementOptions& opts = {});

// Cells whose closure lies inside at least one of the masked bodies.
std::vector<std::int32_t> blocked_cells(const CellComplex& complex, std::uint64_t mask);

}  // namespace ccert
