#include <doctest.h>

#include <random>

#include "ccert/body_ops.hpp"
#include "ccert/generators.hpp"
#include "ccert/lp.hpp"

using namespace ccert;

namespace {

ConvexBody unit_square() {
  ConvexBody b;
  b.name = "sq";
  b.halfspaces = box_halfspaces(Box{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
  return b;
}

ConvexBody box2(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
  ConvexBody b;
  b.name = "box";
  b.halfspaces = box_halfspaces(Box{{x0, y0}, {x1, y1}});
  return b;
}

Vec pt(long x, long y) { return {Rat(x), Rat(y)}; }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_from_string("3/4") == make_rat(3, 4));
  CHECK(rat_from_string("-1.25") == make_rat(-5, 4));
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("2/4") == make_rat(1, 2));
  CHECK(rat_to_string(make_rat(2, 4)) == "1/2");
  CHECK(rat_to_string(Rat(-3)) == "-3");
  CHECK(rat_from_string(rat_to_string(make_rat(-22, 7))) == make_rat(-22, 7));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK(rat_to_decimal(make_rat(5, 4), 4) == "1.25");
  CHECK(rat_to_decimal(make_rat(-1, 3), 4) == "-0.3333");
  CHECK(rat_sqrt(make_rat(9, 4)) == make_rat(3, 2));
  CHECK(!rat_sqrt(Rat(2)).has_value());
}

TEST_CASE("linear algebra basics") {
  Mat a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  CHECK(determinant(a) == Rat(-2));
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(mat_apply(*inv, mat_apply(a, pt(5, -7))) == pt(5, -7));

  // Three concurrent lines x=0, y=0, x+y=0 as equalities: unique solution.
  Mat sys{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  auto sol = solve_linear(sys, {Rat(0), Rat(0), Rat(0)});
  REQUIRE(sol.has_value());
  CHECK(*sol == pt(0, 0));

  CHECK(!solve_linear(Mat{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, {Rat(0), Rat(1)}));
  CHECK(rank(Mat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);

  Mat ns = nullspace(Mat{{Rat(1), Rat(1)}});
  REQUIRE(ns.size() == 1);
  CHECK(dot(ns[0], {Rat(1), Rat(1)}) == Rat(0));
}

TEST_CASE("lp feasibility") {
  // x >= 0, y >= 0, x + y <= 1.
  std::vector<HalfSpace> hs{{{Rat(-1), Rat(0)}, Rat(0)},
                            {{Rat(0), Rat(-1)}, Rat(0)},
                            {{Rat(1), Rat(1)}, Rat(1)}};
  auto p = lp_feasible(hs);
  REQUIRE(p.has_value());
  for (const HalfSpace& h : hs) CHECK(h.contains(*p));

  // x <= 0 and x >= 1 is contradictory.
  std::vector<HalfSpace> bad{{{Rat(1)}, Rat(0)}, {{Rat(-1)}, Rat(-1)}};
  CHECK(!lp_feasible(bad).has_value());

  // Three concurrent lines as equalities pin the origin.
  std::vector<HalfSpace> eqs{{{Rat(1), Rat(0)}, Rat(0)},
                             {{Rat(0), Rat(1)}, Rat(0)},
                             {{Rat(1), Rat(1)}, Rat(0)}};
  auto q = lp_feasible({}, eqs);
  REQUIRE(q.has_value());
  CHECK(*q == pt(0, 0));

  CHECK_THROWS_AS(lp_feasible(std::vector<HalfSpace>{{{Rat(1)}, Rat(0)},
                                                     {{Rat(1), Rat(0)}, Rat(0)}}),
                  std::invalid_argument);
}

TEST_CASE("lp optimization statuses") {
  std::vector<LpConstraint> cons{{{Rat(1), Rat(0)}, Rat(1), false},
                                 {{Rat(0), Rat(1)}, Rat(2), false},
                                 {{Rat(-1), Rat(0)}, Rat(0), false},
                                 {{Rat(0), Rat(-1)}, Rat(0), false}};
  LpResult r = solve_lp(2, {Rat(1), Rat(1)}, true, cons);
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == Rat(3));

  LpResult unb = solve_lp(2, {Rat(1), Rat(0)}, true,
                          {{{Rat(-1), Rat(0)}, Rat(0), false}});
  CHECK(unb.status == LpStatus::unbounded);

  LpResult inf = solve_lp(1, {Rat(1)}, true,
                          {{{Rat(1)}, Rat(0), false}, {{Rat(-1)}, Rat(-1), false}});
  CHECK(inf.status == LpStatus::infeasible);

  // Degenerate equality system: three lines through the origin.
  LpResult eq = solve_lp(2, {}, false,
                         {{{Rat(1), Rat(0)}, Rat(0), true},
                          {{Rat(0), Rat(1)}, Rat(0), true},
                          {{Rat(1), Rat(1)}, Rat(0), true}});
  CHECK(eq.status == LpStatus::optimal);
  CHECK(eq.point == pt(0, 0));
}

TEST_CASE("Bland's rule terminates on Beale's cycling example") {
  // Degenerate program that cycles under the classic most-negative rule.
  auto ge0 = [](int j) {
    Vec a = zero_vec(4);
    a[j] = -1;
    return LpConstraint{a, Rat(0), false};
  };
  std::vector<LpConstraint> cons{
      {{make_rat(1, 4), Rat(-60), make_rat(-1, 25), Rat(9)}, Rat(0), false},
      {{make_rat(1, 2), Rat(-90), make_rat(-1, 50), Rat(3)}, Rat(0), false},
      {{Rat(0), Rat(0), Rat(1), Rat(0)}, Rat(1), false},
      ge0(0), ge0(1), ge0(2), ge0(3)};
  Vec obj{make_rat(-3, 4), Rat(150), make_rat(-1, 50), Rat(6)};
  LpResult r = solve_lp(4, obj, false, cons);
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == make_rat(-1, 20));
}

TEST_CASE("projection along two directions in 3-space") {
  ConvexBody box;
  box.name = "box";
  box.halfspaces = box_halfspaces(
      Box{{Rat(0), Rat(-2), Rat(5)}, {Rat(1), Rat(3), Rat(9)}});
  Mat dirs{{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  Mat comp = orthogonal_complement(dirs, 3);
  REQUIRE(comp.size() == 1);
  ConvexBody proj = project_body(box, dirs, comp);
  Vec lo = project_point({Rat(0), Rat(0), Rat(7)}, dirs, comp);
  Vec hi = project_point({Rat(1), Rat(1), Rat(6)}, dirs, comp);
  CHECK(proj.contains(lo));
  CHECK(proj.contains(hi));
  Vec beyond = project_point({make_rat(11, 10), Rat(0), Rat(7)}, dirs, comp);
  CHECK(!proj.contains(beyond));
}

TEST_CASE("contains") {
  ConvexBody sq = unit_square();
  CHECK(sq.contains({make_rat(1, 2), make_rat(1, 2)}));
  CHECK(!sq.contains(pt(2, 0)));
  ConvexBody line;  // x + y = 1 as two half-spaces
  line.name = "l";
  line.halfspaces = {{{Rat(1), Rat(1)}, Rat(1)}, {{Rat(-1), Rat(-1)}, Rat(-1)}};
  CHECK(line.contains({make_rat(1, 2), make_rat(1, 2)}));
  CHECK(!line.contains(pt(1, 1)));
}

TEST_CASE("boundedness and vertices") {
  CHECK(is_bounded(unit_square()));
  ConvexBody half;
  half.name = "h";
  half.halfspaces = {{{Rat(-1), Rat(0)}, Rat(0)}};
  CHECK(!is_bounded(half));

  auto verts = vertices(unit_square());
  CHECK(verts.size() == 4);

  ConvexBody line;
  line.name = "l";
  line.halfspaces = {{{Rat(1), Rat(0)}, Rat(0)}, {{Rat(-1), Rat(0)}, Rat(0)}};
  CHECK(!is_bounded(line));
  CHECK(vertices(line).empty());
}

TEST_CASE("closest point on the unit square") {
  ConvexBody sq = unit_square();
  CHECK(closest_point(sq, {Rat(2), make_rat(1, 2)}) == Vec{Rat(1), make_rat(1, 2)});
  Vec inside{make_rat(1, 4), make_rat(1, 4)};
  CHECK(closest_point(sq, inside) == inside);
  CHECK(closest_point(sq, pt(2, 2)) == pt(1, 1));

  // Variational inequality against every vertex.
  Vec b{Rat(3), Rat(-2)};
  Vec q = closest_point(sq, b);
  CHECK(sq.contains(q));
  for (const Vec& y : vertices(sq)) {
    CHECK(norm_sq(sub(b, q)) <= norm_sq(sub(b, y)));
    CHECK(dot(sub(b, q), sub(y, q)) <= 0);
  }
}

TEST_CASE("support halfspace") {
  ConvexBody sq = box2(1, 2, 0, 1);
  HalfSpace h = support_halfspace(sq, pt(0, 0));
  // phi = (1,0), so H is x1 >= 1, stored as -x1 <= -1.
  CHECK(h.normal == Vec{Rat(-1), Rat(0)});
  CHECK(h.offset == Rat(-1));
  for (const Vec& v : vertices(sq)) CHECK(h.contains(v));
  CHECK(!h.contains(pt(0, 0)));

  ConvexBody interval;
  interval.name = "i";
  interval.halfspaces = {{{Rat(1)}, Rat(3)}, {{Rat(-1)}, Rat(-2)}};
  HalfSpace h1 = support_halfspace(interval, {Rat(0)});
  CHECK(h1.normal == Vec{Rat(-2)});
  CHECK(h1.offset == Rat(-4));  // -2x <= -4, i.e. x >= 2

  CHECK_THROWS_AS(support_halfspace(unit_square(), {make_rat(1, 2), make_rat(1, 2)}),
                  std::invalid_argument);
}

TEST_CASE("projection by variable elimination") {
  ConvexBody sq = unit_square();
  Mat dirs{{Rat(0), Rat(1)}};
  Mat comp = orthogonal_complement(dirs, 2);
  ConvexBody proj = project_body(sq, dirs, comp);
  CHECK(proj.contains({make_rat(1, 2)}));
  CHECK(proj.contains({Rat(0)}));
  CHECK(proj.contains({Rat(1)}));
  CHECK(!proj.contains({make_rat(11, 10)}));
  CHECK(!proj.contains({make_rat(-1, 10)}));

  // Segment projected along its own direction collapses to a point.
  ConvexBody seg;
  seg.name = "s";
  seg.halfspaces = {{{Rat(1), Rat(-1)}, Rat(0)},
                    {{Rat(-1), Rat(1)}, Rat(0)},
                    {{Rat(1), Rat(0)}, Rat(1)},
                    {{Rat(-1), Rat(0)}, Rat(0)}};
  Mat dirs2{{Rat(1), Rat(1)}};
  Mat comp2 = orthogonal_complement(dirs2, 2);
  ConvexBody collapsed = project_body(seg, dirs2, comp2);
  Vec p0 = project_point(pt(0, 0), dirs2, comp2);
  CHECK(collapsed.contains(p0));
  CHECK(project_point(pt(1, 1), dirs2, comp2) == p0);
  Vec off = p0;
  off[0] += make_rat(1, 100);
  CHECK(!collapsed.contains(off));

  CHECK_THROWS_AS(orthogonal_complement(Mat{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, 2),
                  std::invalid_argument);
}

TEST_CASE("projection membership matches the fiber LP") {
  // Triangle conv{(0,0),(2,0),(0,2)} projected along (1,-1).
  ConvexBody tri;
  tri.name = "t";
  tri.halfspaces = {{{Rat(-1), Rat(0)}, Rat(0)},
                    {{Rat(0), Rat(-1)}, Rat(0)},
                    {{Rat(1), Rat(1)}, Rat(2)}};
  Mat dirs{{Rat(1), Rat(-1)}};
  Mat comp = orthogonal_complement(dirs, 2);
  ConvexBody proj = project_body(tri, dirs, comp);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Rat t = make_rat(static_cast<long>(rng() % 161) - 80, 20);
    Vec lifted = lift_point({t}, comp);
    // Fiber feasibility: exists s with lifted + s * dir inside the body.
    std::vector<LpConstraint> cons;
    for (const HalfSpace& h : tri.halfspaces)
      cons.push_back({{dot(h.normal, dirs[0])}, h.offset - dot(h.normal, lifted), false});
    bool fiber = lp_feasible_point(1, cons).has_value();
    CHECK(proj.contains({t}) == fiber);
  }
}

TEST_CASE("clip to box") {
  ConvexBody line;
  line.name = "x0";
  line.halfspaces = {{{Rat(1), Rat(0)}, Rat(0)}, {{Rat(-1), Rat(0)}, Rat(0)}};
  Box box{{Rat(-10), Rat(-10)}, {Rat(10), Rat(10)}};
  ConvexBody seg = clip_to_box(line, box);
  CHECK(is_bounded(seg));
  CHECK(seg.contains(pt(0, 10)));
  CHECK(seg.contains(pt(0, -10)));
  CHECK(!seg.contains({Rat(0), make_rat(21, 2)}));

  ConvexBody half;
  half.name = "h";
  half.halfspaces = {{{Rat(-1), Rat(0)}, Rat(0)}};
  ConvexBody clipped = clip_to_box(half, Box{{Rat(-1), Rat(-1)}, {Rat(1), Rat(1)}});
  auto verts = vertices(clipped);
  CHECK(verts.size() == 4);
  CHECK(clipped.contains(pt(0, 0)));
  CHECK(!clipped.contains({make_rat(-1, 2), Rat(0)}));

  // A huge box leaves a bounded body's vertex set unchanged.
  ConvexBody sq = unit_square();
  auto v1 = vertices(sq);
  auto v2 = vertices(clip_to_box(sq, Box{{Rat(-100), Rat(-100)}, {Rat(100), Rat(100)}}));
  CHECK(v1.size() == v2.size());
  for (const Vec& v : v1)
    CHECK(std::find(v2.begin(), v2.end(), v) != v2.end());
}

TEST_CASE("affine maps preserve membership") {
  ConvexBody sq = unit_square();
  AffineMap identity{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, {Rat(0), Rat(0)}};
  ConvexBody same = apply_affine(identity, sq);
  CHECK(same.contains({make_rat(1, 2), make_rat(1, 2)}));

  AffineMap doubling{{{Rat(2), Rat(0)}, {Rat(0), Rat(2)}}, {Rat(0), Rat(0)}};
  ConvexBody big = apply_affine(doubling, sq);
  Vec x{make_rat(1, 2), make_rat(1, 2)};
  CHECK(big.contains(apply_affine(doubling, x)) == sq.contains(x));

  std::mt19937_64 rng(11);
  AffineMap t = random_invertible_affine(2, rng);
  ConvexBody image = apply_affine(t, sq);
  for (int trial = 0; trial < 20; ++trial) {
    Vec p{make_rat(static_cast<long>(rng() % 41) - 20, 10),
          make_rat(static_cast<long>(rng() % 41) - 20, 10)};
    CHECK(sq.contains(p) == image.contains(apply_affine(t, p)));
  }

  AffineMap singular{{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, {Rat(0), Rat(0)}};
  CHECK_THROWS_AS(apply_affine(singular, sq), std::invalid_argument);
}

TEST_CASE("redundancy removal") {
  ConvexBody sq = unit_square();
  sq.halfspaces.push_back({{Rat(1), Rat(0)}, Rat(5)});  // implied by x <= 1
  ConvexBody lean = remove_redundant(sq);
  CHECK(lean.halfspaces.size() == 4);
  CHECK(lean.contains(pt(1, 1)));
  CHECK(!lean.contains(pt(2, 0)));
}

TEST_CASE("default clip box covers the family") {
  Family family;
  family.dimension = 2;
  family.bodies = {unit_square(), box2(3, 4, 3, 4)};
  Box box = default_clip_box(family, {pt(-2, -2)});
  for (const ConvexBody& body : family.bodies)
    for (const Vec& v : vertices(body)) {
      for (int j = 0; j < 2; ++j) {
        CHECK(box.lo[j] <= v[j]);
        CHECK(v[j] <= box.hi[j]);
      }
    }
  CHECK(box.lo[0] <= Rat(-2));
}
