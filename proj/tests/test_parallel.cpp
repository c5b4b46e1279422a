#include <doctest.h>

#include "ccert/generators.hpp"
#include "ccert/theorems.hpp"
#include "fixtures.hpp"

using namespace ccert;

namespace {

void check_complex_equal(const CellComplex& a, const CellComplex& b) {
  REQUIRE(a.cells.size() == b.cells.size());
  REQUIRE(a.hyperplanes.size() == b.hyperplanes.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].sign == b.cells[i].sign);
    CHECK(a.cells[i].representative == b.cells[i].representative);
    CHECK(a.cells[i].unbounded == b.cells[i].unbounded);
    CHECK(a.cells[i].dim == b.cells[i].dim);
    CHECK(a.cells[i].covered_mask == b.cells[i].covered_mask);
  }
  CHECK(a.adjacency == b.adjacency);
}

}  // namespace

TEST_CASE("parallel arrangement equals the serial reference") {
  std::vector<Family> instances{
      gen_lines_general_position(4, 7),
      gen_concurrent_lines(4, {Rat(1), Rat(-1)}),
      gen_simplex_facet_bodies(2, make_rat(1, 10)),
      fixtures::nested_triangles(),
  };
  for (const Family& family : instances) {
    CellComplex serial = build_arrangement_serial(family);
    CellComplex parallel = build_arrangement(family, {14, Exec::parallel});
    check_complex_equal(serial, parallel);
  }
}

TEST_CASE("parallel pik sweep equals the serial reference") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Family family = gen_random_pik(5, 2, 2, seed);
    for (int k = 1; k <= 4; ++k) {
      PikReport s = check_pik(family, k, {Exec::serial});
      PikReport p = check_pik(family, k, {Exec::parallel});
      CHECK(s.holds == p.holds);
      CHECK(s.violating == p.violating);
      CHECK(s.witnesses == p.witnesses);
    }
  }
}

TEST_CASE("parallel depth and central point equal the serial reference") {
  Family nested = fixtures::nested_triangles();
  CellComplex complex = build_arrangement(nested);
  Vec x = fixtures::nested_inner_point();

  DepthCertificate ds = depth(nested, complex, x, {Exec::serial});
  DepthCertificate dp = depth(nested, complex, x, {Exec::parallel});
  CHECK(ds.depth == dp.depth);
  CHECK(ds.hit_set == dp.hit_set);
  CHECK(ds.escape.path == dp.escape.path);

  CentralPointReport cs = central_point(nested, complex, {}, {Exec::serial});
  CentralPointReport cp = central_point(nested, complex, {}, {Exec::parallel});
  CHECK(cs.best.depth == cp.best.depth);
  CHECK(cs.best.point == cp.best.point);
  CHECK(cs.best_cell == cp.best_cell);
  CHECK(cs.bound_met == cp.bound_met);
}

TEST_CASE("parallel tukey sweep equals the serial reference") {
  std::vector<Vec> pts{{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(0), Rat(4)},
                       {Rat(3), Rat(3)}, {Rat(1), Rat(2)}};
  TukeyReport s = discrete_central_point(pts, {200000, Exec::serial});
  TukeyReport p = discrete_central_point(pts, {200000, Exec::parallel});
  CHECK(s.depth == p.depth);
  CHECK(s.best == p.best);
  CHECK(s.candidates_tried == p.candidates_tried);
}
