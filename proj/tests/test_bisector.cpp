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

#include "doctest.h"
#include "kgvd/bisector/bisector.hpp"
#include "kgvd/geom/error.hpp"
#include "kgvd/oracle/visibility_graph.hpp"
#include "kgvd/scenarios/shapes.hpp"

using namespace kgvd;

TEST_CASE("square: vertical bisector") {
  DomainPtr d = make_domain(scenarios::square4());
  Bisector b = build_bisector(build_spm(d, {1, 2}), build_spm(d, {3, 2}));
  CHECK(b.vertices.empty());
  CHECK(b.start.x.x == doctest::Approx(2));
  CHECK(b.start.x.y == doctest::Approx(4));
  CHECK(b.end.x.x == doctest::Approx(2));
  CHECK(b.end.x.y == doctest::Approx(0));
  BisectorPieces pc = decompose_pieces(b);
  REQUIRE(pc.pieces.size() == 1);
  CHECK(pc.pieces[0].kind == PieceKind::kDoubleVisible);
  for (const Point& x : b.polyline(8)) CHECK(x.x == doctest::Approx(2));
}

TEST_CASE("square: diagonal bisector") {
  DomainPtr d = make_domain(scenarios::square4());
  // through two corners: rejected
  try {
    build_bisector(build_spm(d, {1, 1}), build_spm(d, {3, 3}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDegenerateEquidistantVertex);
  }
  Bisector b = build_bisector(build_spm(d, {1, 1.5}), build_spm(d, {3, 3.5}));
  CHECK(b.start.x.x == doctest::Approx(0.5));
  CHECK(b.start.x.y == doctest::Approx(4));
  CHECK(b.end.x.x == doctest::Approx(4));
  CHECK(b.end.x.y == doctest::Approx(0.5));
  for (const Point& x : b.polyline(8)) CHECK(x.x + x.y == doctest::Approx(4.5));
}

TEST_CASE("L-shape: bisector crosses an extension segment") {
  Polygon l = scenarios::l_shape();
  DomainPtr d = make_domain(l);
  // p in the top arm, q in the right arm; the ray from p through the
  // reflex corner ends on y = 0 at x = 2 + 2/1.2
  Point ps{1, 3.2}, qs{3.5, 1};
  Bisector b = build_bisector(build_spm(d, ps), build_spm(d, qs));
  REQUIRE(b.vertices.size() == 1);
  CHECK(b.vertices[0].owner == 0);
  CHECK(b.vertices[0].vertex == 3);
  oracle::VisibilityGraph vg(l);
  for (const Point& x : b.polyline(16))
    CHECK(std::fabs(vg.distance(ps, x) - vg.distance(qs, x)) < 1e-9);
  BisectorPieces pc = decompose_pieces(b);
  CHECK(pc.pieces.size() == 2);
  CHECK(pc.separators.size() == 1);
}

TEST_CASE("bisector matches the geodesic oracle on reference polygons") {
  int built = 0, degenerate = 0;
  for (const Polygon& poly : scenarios::test_polygons()) {
    DomainPtr d = make_domain(poly);
    oracle::VisibilityGraph vg(poly);
    uint64_t state = 17 + poly.size();
    const double diam = poly.diameter();
    for (int trial = 0; trial < 12; ++trial) {
      Point ps = scenarios::random_interior_point(poly, &state, 1e-3 * diam);
      Point qs = scenarios::random_interior_point(poly, &state, 1e-3 * diam);
      ExtendedSpm sp = build_spm(d, ps), sq = build_spm(d, qs);
      Bisector b;
      try {
        b = build_bisector(sp, sq);
      } catch (const Error& e) {
        ++degenerate;
        continue;
      }
      ++built;
      // endpoints on the boundary, equidistant
      CHECK(poly.boundary_distance(b.start.x) < 1e-9 * diam);
      CHECK(poly.boundary_distance(b.end.x) < 1e-9 * diam);
      for (const Point& x : b.polyline(6)) {
        double r = vg.distance(ps, x) - vg.distance(qs, x);
        CHECK(std::fabs(r) < 1e-8 * diam);
      }
      // distance along the bisector decreases then increases
      int turns = 0;
      for (int i = 1; i + 1 < b.node_count(); ++i) {
        double a = vg.distance(ps, b.node(i - 1)), c = vg.distance(ps, b.node(i));
        double e = vg.distance(ps, b.node(i + 1));
        if ((c - a) < 0 && (e - c) > 0) ++turns;
        CHECK_FALSE(((c - a) > 0 && (e - c) < 0));
      }
      CHECK(turns <= 1);
      // the first site lies to the right
      Point m0 = b.arcs[0].arc.point(0.5 * (b.arcs[0].arc.t0 + b.arcs[0].arc.t1));
      Point m1 = b.arcs[0].arc.point(0.5 * (b.arcs[0].arc.t0 + b.arcs[0].arc.t1) + 1e-4);
      Vec dir = normalized(m1 - m0);
      if (b.arcs[0].arc.t1 < b.arcs[0].arc.t0) dir = dir * -1.0;
      Point right = m0 + Vec{dir.y, -dir.x} * (1e-4 * diam);
      if (poly.strictly_inside(right, 0))
        CHECK(vg.distance(ps, right) < vg.distance(qs, right));
      CHECK(decompose_pieces(b).pieces.size() <= 5);
    }
  }
  CHECK(built > 100);
  CHECK(degenerate <= 2);
}
