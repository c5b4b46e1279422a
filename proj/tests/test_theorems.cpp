#include <doctest.h>

#include <random>

#include "ccert/generators.hpp"
#include "ccert/grid_oracle.hpp"
#include "ccert/theorems.hpp"
#include "fixtures.hpp"

using namespace ccert;

namespace {

Vec pt(long x, long y) { return {Rat(x), Rat(y)}; }

}  // namespace

TEST_CASE("prime powers and the depth bound") {
  CHECK(is_prime_power(1));
  CHECK(is_prime_power(2));
  CHECK(is_prime_power(3));
  CHECK(is_prime_power(4));
  CHECK(is_prime_power(9));
  CHECK(!is_prime_power(6));
  CHECK(!is_prime_power(12));
  CHECK(required_depth(3, 2) == 1);
  CHECK(required_depth(4, 2) == 2);
  CHECK(required_depth(7, 2) == 3);
}

TEST_CASE("central point on generic, concurrent, and nested instances") {
  Family lines = gen_lines_general_position(3, 5);
  CellComplex lc = build_arrangement(lines);
  CentralPointReport r1 = central_point(lines, lc);
  CHECK(r1.pi_d_holds);
  CHECK(r1.required == 1);
  CHECK(r1.best.depth >= 1);
  CHECK(r1.bound_met);

  Family conc = gen_concurrent_lines(5, pt(0, 0));
  CellComplex cc = build_arrangement(conc);
  CentralPointReport r2 = central_point(conc, cc);
  CHECK(r2.best.depth == 5);
  CHECK(r2.best.point == pt(0, 0));
  CHECK(r2.bound_met);

  Family nested = fixtures::nested_triangles();
  CellComplex nc = build_arrangement(nested);
  CentralPointReport r3 = central_point(nested, nc);
  CHECK(check_pik(nested, 2).holds);
  CHECK(r3.required == 2);
  CHECK(r3.best.depth >= 2);
  CHECK(r3.bound_met);
  // Cross-check the claimed best depth at the inner point with the grid oracle:
  // depth >= 2 means removing any single line still blocks every escape.
  Vec inner = fixtures::nested_inner_point();
  DepthCertificate inner_cert = depth(nested, nc, inner);
  CHECK(inner_cert.depth >= 2);
  GridOracleConfig config;
  config.step = make_rat(1, 16);
  config.box = default_clip_box(nested, {inner});
  for (int drop = 0; drop < nested.size(); ++drop) {
    std::uint64_t avoid = ((std::uint64_t{1} << nested.size()) - 1) & ~(std::uint64_t{1} << drop);
    CHECK(!grid_escape_oracle(nested, avoid, inner, config));
  }

  // Evaluating at a user point reports that point.
  CentralPointReport at = central_point(nested, nc, inner);
  CHECK(at.best.point == inner);
  CHECK(at.best_cell == -1);
}

TEST_CASE("dual Tverberg partitions") {
  Family conc = gen_concurrent_lines(3, pt(0, 0));
  CellComplex cc = build_arrangement(conc);
  PartitionSearchResult r1 =
      partition_for_point(conc, cc, 1, pt(0, 0));
  REQUIRE(r1.certificate.has_value());
  CHECK(r1.certificate->groups.size() == 1);
  CHECK(r1.certificate->groups[0].contains);
  CHECK(r1.certificate->r_is_prime_power);
  CHECK(verify_partition(conc, cc, *r1.certificate).ok);

  Family nested = fixtures::nested_triangles();
  CellComplex nc = build_arrangement(nested);
  PartitionSearchResult r2 =
      partition_for_point(nested, nc, 2, fixtures::nested_inner_point());
  REQUIRE(r2.certificate.has_value());
  CHECK(r2.certificate->groups.size() == 2);
  for (const GroupVerdict& g : r2.certificate->groups) {
    CHECK(!g.contains);  // the inner point lies on no line
    CHECK(g.surround.surrounded);
    CHECK(g.bodies.size() == 3);
  }
  CHECK(verify_partition(nested, nc, *r2.certificate).ok);

  // Three generic lines: only r = 1 is guaranteed, but at any crossing two
  // singleton groups both contain the point, so r = 2 succeeds there.
  Family lines = gen_lines_general_position(3, 5);
  CellComplex lc = build_arrangement(lines);
  PartitionSearchResult r3 = dual_tverberg_partition(lines, lc, 2);
  REQUIRE(r3.certificate.has_value());
  CHECK(verify_partition(lines, lc, *r3.certificate).ok);
  for (const GroupVerdict& g : r3.certificate->groups) CHECK(g.contains);

  // r = 4 is impossible with three bodies: the exhaustive flag certifies
  // that every candidate point and assignment was enumerated.
  PartitionSearchResult r4 = dual_tverberg_partition(lines, lc, 4);
  CHECK(!r4.certificate.has_value());
  CHECK(r4.exhaustive);
}

TEST_CASE("verify_partition rejects tampered certificates") {
  Family nested = fixtures::nested_triangles();
  CellComplex nc = build_arrangement(nested);
  PartitionSearchResult found =
      partition_for_point(nested, nc, 2, fixtures::nested_inner_point());
  REQUIRE(found.certificate.has_value());
  PartitionCertificate good = *found.certificate;

  PartitionCertificate overlapping = good;
  overlapping.groups[1].bodies = overlapping.groups[0].bodies;
  VerifyOutcome v1 = verify_partition(nested, nc, overlapping);
  CHECK(!v1.ok);
  CHECK(v1.failing_check == "disjointness");

  // Claim surround for a group whose union contains x.
  Family conc = gen_concurrent_lines(3, pt(0, 0));
  CellComplex cc = build_arrangement(conc);
  PartitionCertificate bogus;
  bogus.point = pt(0, 0);
  bogus.r = 1;
  bogus.r_is_prime_power = true;
  GroupVerdict g;
  g.bodies = {0, 1, 2};
  g.contains = false;
  bogus.groups.push_back(g);
  VerifyOutcome v2 = verify_partition(conc, cc, bogus);
  CHECK(!v2.ok);
  CHECK(v2.failing_check == "containment precludes surround");

  PartitionCertificate empty_group = good;
  empty_group.groups[0].bodies.clear();
  CHECK(!verify_partition(nested, nc, empty_group).ok);
}

TEST_CASE("lemma 5 simplex certificate on the 3-4-5 triangle edges") {
  Family tri = fixtures::triangle_edges();
  Vec incenter = pt(1, 1);
  Lemma5Result result = lemma_surround_certificate(tri, incenter);
  CHECK(result.pi_d_holds);
  CHECK(result.hypothesis_holds);
  REQUIRE(result.certificate.has_value());
  const SimplexCertificate& cert = *result.certificate;
  CHECK(cert.closest[0] == pt(1, 0));
  CHECK(cert.closest[1] == pt(0, 1));
  CHECK(cert.closest[2] == Vec{make_rat(8, 5), make_rat(9, 5)});
  // x_i lies in every body except its own; here they are the vertices.
  CHECK(cert.simplex[0] == pt(0, 3));
  CHECK(cert.simplex[1] == pt(4, 0));
  CHECK(cert.simplex[2] == pt(0, 0));
  for (const Rat& l : cert.barycentric) CHECK(l > 0);
  CHECK(cert.surround_cross_check);

  Lemma5Result far = lemma_surround_certificate(tri, pt(50, 50));
  CHECK(far.pi_d_holds);
  CHECK(!far.hypothesis_holds);
  CHECK(!far.certificate.has_value());

  Lemma5Result inside = lemma_surround_certificate(tri, pt(2, 0));
  CHECK(!inside.certificate.has_value());  // base point lies in a body

  // Without the d-intersection property the lemma does not apply.
  Family squares;
  squares.dimension = 2;
  ConvexBody s1{"s1", box_halfspaces(Box{{Rat(1), Rat(-1)}, {Rat(3), Rat(1)}})};
  ConvexBody s2{"s2", box_halfspaces(Box{{Rat(-3), Rat(-1)}, {Rat(-1), Rat(1)}})};
  ConvexBody s3{"s3", box_halfspaces(Box{{Rat(-1), Rat(1)}, {Rat(1), Rat(3)}})};
  squares.bodies = {s1, s2, s3};
  Lemma5Result no_pi = lemma_surround_certificate(squares, pt(0, 0));
  CHECK(!no_pi.pi_d_holds);
  CHECK(!no_pi.certificate.has_value());

  // Degenerate: both closest points coincide, the hull has empty interior.
  Family touching;
  touching.dimension = 1;
  ConvexBody i1{"i1", {{{Rat(1)}, Rat(2)}, {{Rat(-1)}, Rat(-1)}}};
  ConvexBody i2{"i2", {{{Rat(1)}, Rat(3)}, {{Rat(-1)}, Rat(-1)}}};
  touching.bodies = {i1, i2};
  Lemma5Result degenerate = lemma_surround_certificate(touching, {Rat(0)});
  CHECK(degenerate.pi_d_holds);
  CHECK(!degenerate.hypothesis_holds);

  // One dimension lower: two disjoint intervals surround the gap point.
  Family gap;
  gap.dimension = 1;
  ConvexBody g1{"g1", {{{Rat(1)}, Rat(-1)}, {{Rat(-1)}, Rat(2)}}};
  ConvexBody g2{"g2", {{{Rat(1)}, Rat(2)}, {{Rat(-1)}, Rat(-1)}}};
  gap.bodies = {g1, g2};
  Lemma5Result one_d = lemma_surround_certificate(gap, {Rat(0)});
  CHECK(one_d.pi_d_holds);
  CHECK(one_d.hypothesis_holds);
  REQUIRE(one_d.certificate.has_value());
  CHECK(one_d.certificate->surround_cross_check);
}

TEST_CASE("lemma 5 accepts thickened facets with the exact incenter") {
  SimplexFacetInstance inst = gen_simplex_facet_instance(2, make_rat(1, 10), 0);
  Lemma5Result result = lemma_surround_certificate(inst.family, inst.base_point);
  CHECK(result.pi_d_holds);
  CHECK(result.hypothesis_holds);
  REQUIRE(result.certificate.has_value());
  CHECK(result.certificate->surround_cross_check);
}

TEST_CASE("transversal search on slab instances") {
  std::vector<Family> families{
      fixtures::slab_family(Rat(0), Rat(1), Rat(2), Rat(3), "A"),
      fixtures::slab_family(make_rat(1, 2), make_rat(5, 4), make_rat(7, 4), Rat(3), "B")};
  TransversalSearchResult result = transversal_search(families, 1);
  REQUIRE(result.certificate.has_value());
  const TransversalCertificate& cert = *result.certificate;
  CHECK(cert.r_values == std::vector<int>{1, 1});
  CHECK(cert.flat.directions.size() == 1);
  CHECK(cert.families.size() == 2);
  // Re-verify every verdict through surrounds_flat / projected containment.
  for (std::size_t i = 0; i < families.size(); ++i) {
    for (const TransversalGroup& group : cert.families[i].groups) {
      if (group.intersects) {
        Mat comp = orthogonal_complement(cert.flat.directions, 2);
        ConvexBody proj =
            project_body(families[i].bodies[group.member], cert.flat.directions, comp);
        CHECK(proj.contains(project_point(cert.flat.basepoint, cert.flat.directions, comp)));
      } else {
        FlatSurroundVerdict v = surrounds_flat(families[i], group.bodies, cert.flat);
        CHECK(v.verdict.applicable);
        CHECK(v.verdict.surrounded);
      }
    }
  }
  CHECK(cert.same_prime_power);

  // m = 0 reduces to the partition search.
  Family nested = fixtures::nested_triangles();
  TransversalSearchResult zero = transversal_search({nested}, 0);
  REQUIRE(zero.certificate.has_value());
  CHECK(zero.certificate->m_zero);
  CHECK(zero.certificate->r_values == std::vector<int>{2});
  CellComplex nc = build_arrangement(nested);
  PartitionSearchResult direct = dual_tverberg_partition(nested, nc, 2);
  REQUIRE(direct.certificate.has_value());
  CHECK(zero.certificate->flat.basepoint == direct.certificate->point);

  CHECK_THROWS_AS(transversal_search({nested, nested}, 0), std::invalid_argument);
}

TEST_CASE("transversal search with a line flat in 3-space") {
  // Two prism families over thickened triangle facets; projecting along the
  // z-axis reduces to the planar picture, so a vertical line through both
  // inner holes (or through a body) certifies the instance.
  Family planarA = gen_simplex_facet_bodies(2, make_rat(1, 10));
  Family planarB = planarA;
  for (ConvexBody& body : planarB.bodies) {
    body.name += "b";
    for (HalfSpace& h : body.halfspaces)
      h.offset += dot(h.normal, Vec{make_rat(1, 8), make_rat(1, 8)});
  }
  std::vector<Family> families{fixtures::extrude(planarA, Rat(4), ""),
                               fixtures::extrude(planarB, Rat(4), "")};
  for (const Family& f : families) CHECK(check_pik(f, 2).holds);

  TransversalOptions opts;
  opts.grid_density = 1;
  opts.max_hyperplanes = 16;
  TransversalSearchResult result = transversal_search(families, 1, opts);
  REQUIRE(result.certificate.has_value());
  const TransversalCertificate& cert = *result.certificate;
  CHECK(cert.r_values == std::vector<int>{1, 1});
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (const TransversalGroup& group : cert.families[f].groups) {
      if (group.intersects) {
        Mat comp = orthogonal_complement(cert.flat.directions, 3);
        ConvexBody proj = project_body(families[f].bodies[group.member],
                                       cert.flat.directions, comp);
        CHECK(proj.contains(project_point(cert.flat.basepoint, cert.flat.directions, comp)));
      } else {
        ArrangementOptions arr;
        arr.max_hyperplanes = 16;
        FlatSurroundVerdict v = surrounds_flat(families[f], group.bodies, cert.flat, arr);
        CHECK(v.verdict.applicable);
        CHECK(v.verdict.surrounded);
      }
    }
  }
}

TEST_CASE("tukey depth frozen examples") {
  std::vector<Vec> triangle{pt(0, 0), pt(2, 0), pt(0, 2)};
  Vec centroid{make_rat(2, 3), make_rat(2, 3)};
  CHECK(tukey_depth(triangle, centroid) == 1);

  std::vector<Vec> corners{pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2)};
  CHECK(tukey_depth(corners, pt(1, 1)) == 2);

  std::vector<Vec> single{pt(3, 4)};
  CHECK(tukey_depth(single, pt(3, 4)) == 1);
  CHECK(tukey_depth(single, pt(0, 0)) == 0);

  // Collinear sets behave like the 1-D median.
  std::vector<Vec> collinear{pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0), pt(4, 0)};
  CHECK(tukey_depth(collinear, pt(2, 0)) == 3);

  std::vector<Vec> line1d{{Rat(0)}, {Rat(1)}, {Rat(2)}};
  CHECK(tukey_depth(line1d, {Rat(1)}) == 2);

  std::vector<Vec> tetra{{Rat(0), Rat(0), Rat(0)},
                         {Rat(4), Rat(0), Rat(0)},
                         {Rat(0), Rat(4), Rat(0)},
                         {Rat(0), Rat(0), Rat(4)}};
  CHECK(tukey_depth(tetra, {Rat(1), Rat(1), Rat(1)}) == 1);
  CHECK(tukey_depth(tetra, {Rat(-1), Rat(-1), Rat(-1)}) == 0);
}

TEST_CASE("discrete central point meets the bound") {
  std::vector<Vec> square{pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2)};
  TukeyReport report = discrete_central_point(square);
  CHECK(report.depth == 2);
  CHECK(report.required == 2);
  CHECK(report.bound_met);

  std::vector<Vec> one{pt(5, 5)};
  TukeyReport r1 = discrete_central_point(one);
  CHECK(r1.depth == 1);
  CHECK(r1.best == pt(5, 5));
  CHECK(r1.bound_met);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 7);
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back({Rat(static_cast<long>(rng() % 17) - 8),
                     Rat(static_cast<long>(rng() % 17) - 8)});
    TukeyReport r = discrete_central_point(pts);
    CHECK(r.depth >= required_depth(n, 2));
  }

  std::vector<Vec> seg1d{{Rat(0)}, {Rat(2)}, {Rat(5)}, {Rat(9)}};
  TukeyReport r1d = discrete_central_point(seg1d);
  CHECK(r1d.depth >= 2);  // ceil(4/2)

  std::vector<Vec> tetra{{Rat(0), Rat(0), Rat(0)},
                         {Rat(4), Rat(0), Rat(0)},
                         {Rat(0), Rat(4), Rat(0)},
                         {Rat(0), Rat(0), Rat(4)}};
  TukeyReport r3d = discrete_central_point(tetra);
  CHECK(r3d.depth >= 1);
  CHECK(r3d.bound_met);
}

TEST_CASE("replication preserves structure and the depth relation") {
  Family tri = fixtures::triangle_edges();
  Family doubled = replicate_family(tri, 2);
  CHECK(doubled.size() == 6);
  CHECK(check_pik(doubled, 2).holds);
  CHECK(doubled.bodies[0].name != doubled.bodies[1].name);

  Family same = replicate_family(tri, 1);
  CHECK(same.size() == 3);

  CellComplex base = build_arrangement(tri);
  for (int k : {2, 3}) {
    Family repl = replicate_family(tri, k);
    CellComplex rc = build_arrangement(repl);
    CHECK(rc.hyperplanes.size() == base.hyperplanes.size());  // dedupe
    std::vector<Vec> samples{Vec{make_rat(4, 3), Rat(1)}, Vec{Rat(10), Rat(10)},
                             Vec{Rat(1), Rat(0)}, Vec{make_rat(1, 2), make_rat(1, 2)},
                             Vec{Rat(0), Rat(0)}};
    for (const Vec& x : samples) {
      int d0 = depth(tri, base, x).depth;
      int dk = depth(repl, rc, x).depth;
      CHECK((dk + k - 1) / k <= d0);
      CHECK(d0 <= dk);
    }
  }
}
