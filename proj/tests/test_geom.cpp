// Copyright 2026 The kgvd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "doctest.h"
#include "kgvd/geom/domain.hpp"
#include "kgvd/geom/error.hpp"
#include "kgvd/geom/hyperbolic_arc.hpp"
#include "kgvd/geom/roots.hpp"
#include "kgvd/geom/shortest_path.hpp"
#include "kgvd/oracle/visibility_graph.hpp"
#include "kgvd/scenarios/shapes.hpp"

using namespace kgvd;

namespace {

double shoelace(const Polygon& p) { return signed_area(p.vertices()); }

}  // namespace

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(Polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), Error);  // cw
  CHECK_THROWS_AS(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), Error);  // bowtie
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), Error);
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), Error);
  try {
    Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNonSimplePolygon);
  }
  // collinear but non-consecutive vertices are fine
  CHECK_NOTHROW(scenarios::l_shape());
}

TEST_CASE("triangulate small polygons") {
  Triangulation sq = triangulate(scenarios::unit_square());
  CHECK(sq.size() == 2);
  CHECK(sq.dual_edge_count() == 1);
  Triangulation t = triangulate(Polygon({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(t.size() == 1);
  CHECK(t.dual_edge_count() == 0);
  Polygon l = scenarios::l_shape();
  Triangulation lt = triangulate(l);
  CHECK(lt.size() == 4);
  double sum = 0;
  for (int i = 0; i < lt.size(); ++i) {
    CHECK(lt.triangle_area(i) > 0);
    sum += lt.triangle_area(i);
  }
  CHECK(sum == doctest::Approx(shoelace(l)).epsilon(1e-12));
  CHECK(sum == doctest::Approx(12.0));
}

TEST_CASE("triangulations of the reference polygons are trees") {
  for (const Polygon& p : scenarios::test_polygons()) {
    Triangulation t = triangulate(p);
    CHECK(t.size() == p.size() - 2);
    CHECK(t.dual_edge_count() == t.size() - 1);
    double sum = 0;
    for (int i = 0; i < t.size(); ++i) sum += t.triangle_area(i);
    CHECK(std::fabs(sum - shoelace(p)) < 1e-9 * shoelace(p));
  }
}

TEST_CASE("shortest path examples") {
  Triangulation sq = triangulate(scenarios::square4());
  GeodesicPath p = shortest_path(sq, Point{1, 1}, Point{3, 3});
  CHECK(p.waypoints.size() == 2);
  CHECK(p.length == doctest::Approx(2 * std::sqrt(2.0)));
  GeodesicPath z = shortest_path(sq, Point{2, 2}, Point{2, 2});
  CHECK(z.waypoints.size() == 1);
  CHECK(z.length == 0);

  Polygon l = scenarios::l_shape();
  Triangulation lt = triangulate(l);
  GeodesicPath q = shortest_path(lt, Point{3.5, 1}, Point{1, 3.5});
  REQUIRE(q.waypoints.size() == 3);
  CHECK(q.waypoints[1].x == doctest::Approx(2));
  CHECK(q.waypoints[1].y == doctest::Approx(2));
  CHECK(q.vertex_ids[1] == 3);
  double oracle = oracle::visibility_graph_distance(l, {3.5, 1}, {1, 3.5});
  CHECK(q.length == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(oracle == doctest::Approx(2 * std::sqrt(3.25)).epsilon(1e-12));
  // (3,0.5) and (0.5,3) see each other across the notch
  double direct = oracle::visibility_graph_distance(l, {3, 0.5}, {0.5, 3});
  CHECK(geodesic_distance(lt, {3, 0.5}, {0.5, 3}) ==
        doctest::Approx(direct).epsilon(1e-12));
  CHECK(direct == doctest::Approx(2.5 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(shortest_path(lt, Point{3, 3}, Point{1, 1}), Error);
}

TEST_CASE("funnel agrees with the visibility graph on random pairs") {
  uint64_t state = 99;
  for (const Polygon& p : scenarios::test_polygons()) {
    Triangulation t = triangulate(p);
    oracle::VisibilityGraph vg(p);
    const double eps = 1e-9 * p.diameter();
    for (int k = 0; k < 60; ++k) {
      Point a = scenarios::random_interior_point(p, &state, 1e-6);
      Point b = scenarios::random_interior_point(p, &state, 1e-6);
      Point c = scenarios::random_interior_point(p, &state, 1e-6);
      GeodesicPath ab = shortest_path(t, a, b);
      GeodesicPath ba = shortest_path(t, b, a);
      double ref = vg.distance(a, b);
      CHECK(std::fabs(ab.length - ref) <= 1e-9 * std::max(1.0, ref));
      CHECK(std::fabs(ab.length - ba.length) <= eps);
      for (size_t i = 0; i + 2 < ab.waypoints.size(); ++i)
        CHECK(p.is_reflex(ab.vertex_ids[i + 1]));
      double ac = geodesic_distance(t, a, c), cb = geodesic_distance(t, c, b);
      CHECK(ab.length <= ac + cb + eps);
      if (p.segment_inside(a, b, 0.0))
        CHECK(std::fabs(ab.length - dist(a, b)) <= eps);
    }
  }
}

TEST_CASE("domain visibility and critical segments") {
  DomainPtr d = make_domain(scenarios::l_shape());
  CHECK(d->visible[0][3]);
  CHECK_FALSE(d->visible[2][4]);
  // the only reflex vertex is 3 = (2,2)
  int n = 0;
  for (const auto& c : d->critical) {
    CHECK(c.through == 3);
    ++n;
  }
  CHECK(n > 0);
}

TEST_CASE("equal distance roots on a segment") {
  auto r = equal_distance_roots({1, 2}, 0, {3, 2}, 0, {0, 1}, {4, 1});
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(0.5));
  auto h = equal_distance_roots({0, 0}, 1, {2, 0}, 0, {-5, 0.3}, {5, 0.3});
  REQUIRE(h.size() == 1);
  Point x = lerp(Point{-5, 0.3}, Point{5, 0.3}, h[0]);
  CHECK(std::fabs(dist(x, {0, 0}) + 1 - dist(x, {2, 0})) < 1e-12);
  // vertical segment crosses the hyperbola branch twice
  auto two = equal_distance_roots({0, 0}, 1, {2, 0}, 0, {0.2, -5}, {0.2, 5});
  CHECK(two.size() == 2);
  auto none = equal_distance_roots({0, 0}, 1, {2, 0}, 0, {-3, -5}, {-3, 5});
  CHECK(none.empty());
}

TEST_CASE("hyperbolic arcs") {
  std::array<Point, 3> clip = {Point{0, 0}, Point{4, 0}, Point{0, 4}};
  auto arcs = arc_between({1, 2}, 0, {3, 2}, 0, clip, 1e-9);
  REQUIRE(arcs.size() == 1);
  for (const Point& x : arcs[0].sample(10)) {
    CHECK(x.x == doctest::Approx(2).epsilon(1e-9));
    CHECK(std::fabs(arcs[0].residual(x)) < 1e-9);
  }
  HyperbolicArc h({0, 0}, 1, {2, 0}, 0);
  h.t0 = -3;
  h.t1 = 3;
  Point apex = h.point(0);
  CHECK(apex.x == doctest::Approx(0.5));
  CHECK(dist(apex, {0, 0}) + 1 == doctest::Approx(dist(apex, {2, 0})));
  for (const Point& x : h.sample(10)) {
    CHECK(std::fabs(h.residual(x)) < 1e-9);
    CHECK(x.x < 1);  // branch opens toward the first anchor
  }
  std::array<Point, 3> far = {Point{10, 10}, Point{11, 10}, Point{10, 11}};
  CHECK(arc_between({1, 2}, 0, {3, 2}, 0, far, 1e-9).empty());
  CHECK_THROWS_AS(HyperbolicArc({1, 1}, 0.5, {1, 1}, 0.5), Error);
}

TEST_CASE("arc segment intersection by subdivision") {
  HyperbolicArc line({1, 2}, 0, {3, 2}, 0);
  line.t0 = -10;
  line.t1 = 10;
  auto x = arc_intersect_segment(line, {0, 1}, {4, 1}, 1e-9);
  REQUIRE(x.size() == 1);
  CHECK(x[0].x == doctest::Approx(2).epsilon(1e-9));
  CHECK(x[0].y == doctest::Approx(1));
  CHECK(arc_intersect_segment(line, {3, 0}, {4, 3}, 1e-9).empty());
  HyperbolicArc h({0, 0}, 1, {2, 0}, 0);
  h.t0 = -10;
  h.t1 = 10;
  auto g = arc_intersect_segment(h, {0.2, -5}, {0.2, 5}, 1e-9);
  CHECK(g.size() == 2);
  for (const Point& p : g) CHECK(std::fabs(h.residual(p)) < 1e-9);
}

TEST_CASE("first sign change") {
  MarchOptions opt;
  opt.h_max = 0.05;
  opt.tol = 1e-12;
  auto r = first_sign_change([](double t) { return t * t - 0.25; }, 0, 1, opt);
  REQUIRE(r);
  CHECK(*r == doctest::Approx(0.5).epsilon(1e-10));
  CHECK_FALSE(first_sign_change([](double t) { return 1 + t; }, 0, 1, opt));
  opt.lipschitz = 1;
  auto s = first_sign_change([](double t) { return 0.7 - t; }, 0, 1, opt);
  REQUIRE(s);
  CHECK(*s == doctest::Approx(0.7).epsilon(1e-10));
}
