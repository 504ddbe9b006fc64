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
#include "kgvd/geom/error.hpp"
#include "kgvd/oracle/visibility_graph.hpp"
#include "kgvd/scenarios/shapes.hpp"
#include "kgvd/spm/spm.hpp"

using namespace kgvd;

TEST_CASE("convex polygon has a single region") {
  DomainPtr d = make_domain(scenarios::square4());
  ExtendedSpm s = build_spm(d, {2, 2});
  CHECK(s.faces().size() == 1);
  CHECK(s.chord_count() == 0);
  for (int v = 0; v < 4; ++v) CHECK_FALSE(s.extension_segment(v));
  SpmLocation loc = s.locate({1, 1});
  CHECK(loc.distance == doctest::Approx(std::sqrt(2.0)));
  CHECK(loc.apex == kRootApex);
  CHECK(loc.last_vertex == Point{2, 2});
  // a point on a cell edge gets the same distance from either side
  CHECK(s.distance({2, 0.5}) == doctest::Approx(1.5));
  CHECK(s.cells_area() == doctest::Approx(16));
  CHECK_THROWS_AS(build_spm(d, {0, 2}), Error);
  try {
    build_spm(d, {0, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSiteOnBoundary);
  }
}

TEST_CASE("L-shape extension segment") {
  Polygon l = scenarios::l_shape();
  DomainPtr d = make_domain(l);
  ExtendedSpm s = build_spm(d, {3, 0.5});
  CHECK(s.chord_count() == 1);
  auto e = s.extension_segment(3);
  REQUIRE(e);
  // oracle: ray from the site through (2,2) meets y = 4 at x = 2/3
  CHECK(e->end.x == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(e->end.y == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::fabs(orient(Point{3, 0.5}, e->start, e->end)) < 1e-12);
  oracle::VisibilityGraph vg(l);
  SpmLocation hidden = s.locate({1, 3.8});
  CHECK(hidden.last_vertex == Point{2, 2});
  CHECK(hidden.distance ==
        doctest::Approx(vg.distance({3, 0.5}, {1, 3.8})).epsilon(1e-12));
  SpmLocation seen = s.locate({0.5, 3});
  CHECK(seen.apex == kRootApex);
  CHECK(seen.distance == doctest::Approx(2.5 * std::sqrt(2.0)));
  // from (1,1) the continuation through (2,2) leaves the polygon
  ExtendedSpm s2 = build_spm(d, {1, 1});
  CHECK_FALSE(s2.extension_segment(3));
  // from (1,3.5) the extension runs down to the bottom edge
  ExtendedSpm s3 = build_spm(d, {1, 3.5});
  auto e3 = s3.extension_segment(3);
  REQUIRE(e3);
  CHECK(e3->hit_edge == 0);
  CHECK(e3->end.x == doctest::Approx(2 + 2.0 / 1.5).epsilon(1e-12));
}

TEST_CASE("partition and distance agreement on the reference polygons") {
  uint64_t state = 5;
  for (const Polygon& p : scenarios::test_polygons()) {
    DomainPtr d = make_domain(p);
    oracle::VisibilityGraph vg(p);
    for (int rep = 0; rep < 3; ++rep) {
      Point site = scenarios::random_interior_point(p, &state, 1e-3);
      ExtendedSpm s = build_spm(d, site);
      CHECK(std::fabs(s.cells_area() - p.area()) < 1e-6 * p.area());
      CHECK(s.chord_count() <= p.reflex_count());
      auto rd = vg.reflex_distances(site);
      for (int k = 0; k < 100; ++k) {
        Point x = scenarios::random_interior_point(p, &state, 0);
        double ref = vg.distance_with(site, rd, x);
        CHECK(std::fabs(s.distance(x) - ref) < 1e-9 * p.diameter());
      }
      for (int v = 0; v < p.size(); ++v) {
        auto e = s.extension_segment(v);
        if (!e) continue;
        Point from = s.topology().parent[v] < 0 ? site
                                                : p[s.topology().parent[v]];
        CHECK(std::fabs(orient(from, e->start, e->end)) <
              1e-9 * p.diameter() * p.diameter());
        CHECK(p.segment_inside(e->start, e->end, 1e-9 * p.diameter()));
      }
    }
  }
}

TEST_CASE("next SPM event in the L-shape") {
  DomainPtr d = make_domain(scenarios::l_shape());
  ExtendedSpm s = build_spm(d, {3, 0.5});
  Trajectory tr{{3, 0.5}, {-1, 0}, 0};
  auto ev = next_spm_event(s, tr, 0, 2);
  REQUIRE(ev);
  CHECK(ev->time == doctest::Approx(1).epsilon(1e-12));
  CHECK(ev->kind == SpmEventKind::kVertexBecomesVisible);
  CHECK(ev->vertex == 4);
  // structure sampled just before and after differs
  auto before = build_spm(d, tr.at(0.99)).topology();
  auto after = build_spm(d, tr.at(1.01)).topology();
  CHECK_FALSE(before.same_as(after));
  CHECK(before.parent[4] == 3);
  CHECK(after.parent[4] == -1);
  ExtendedSpm adv = advance_spm(s, *ev, tr);
  CHECK(adv.topology().same_as(after));
  CHECK(adv.topology().parent[4] == -1);
  s.time = 1.5;
  CHECK_THROWS_AS(advance_spm(s, *ev, tr), Error);
  // static site and short horizon give nothing
  CHECK_FALSE(next_spm_event(build_spm(d, {3, 0.5}), Trajectory{{3, 0.5}, {0, 0}, 0}, 0, 5));
  CHECK_FALSE(next_spm_event(build_spm(d, {3, 0.5}), tr, 0, 0.5));
  // leaving the polygon first
  Trajectory out{{3, 0.5}, {0, -1}, 0};
  CHECK_THROWS_AS(next_spm_event(build_spm(d, {3, 0.5}), out, 0, 5), Error);
}

TEST_CASE("mirror symmetric polygon gives mirrored maps") {
  Polygon u({{0, 0}, {6, 0}, {6, 4}, {4, 4}, {4, 2}, {2, 2}, {2, 4}, {0, 4}});
  DomainPtr d = make_domain(u);
  ExtendedSpm a = build_spm(d, {1, 1});
  ExtendedSpm b = build_spm(d, {5, 1});
  CHECK(a.chord_count() == b.chord_count());
  for (int k = 0; k < 20; ++k) {
    Point x{0.3 + 0.27 * k, 0.2 + 0.18 * k};
    if (!u.strictly_inside(x, 1e-6)) continue;
    Point mx{6 - x.x, x.y};
    CHECK(a.distance(x) == doctest::Approx(b.distance(mx)).epsilon(1e-12));
  }
}

TEST_CASE("kinetic replay matches scratch rebuilds") {
  uint64_t state = 21;
  int checked = 0;
  for (const Polygon& p : scenarios::test_polygons()) {
    DomainPtr d = make_domain(p);
    Point a = scenarios::random_interior_point(p, &state, 1e-2);
    Point b = scenarios::random_interior_point(p, &state, 1e-2);
    if (!p.segment_inside(a, b, 0)) continue;
    Trajectory tr{a, b - a, 0};
    const double horizon = 0.999;
    ExtendedSpm cur = build_spm(d, a);
    std::vector<double> times;
    double now = 0;
    std::vector<std::pair<double, ExtendedSpm>> segments = {{0.0, cur}};
    for (int guard = 0; guard < 1000; ++guard) {
      auto ev = next_spm_event(cur, tr, now, horizon);
      if (!ev) break;
      times.push_back(ev->time);
      cur = advance_spm(cur, *ev, tr);
      now = ev->time;
      segments.push_back({now, cur});
    }
    CHECK(times.size() <= 4 * d->critical.size());
    std::mt19937_64 rng(state);
    std::uniform_real_distribution<double> u(0, horizon);
    for (int k = 0; k < 100; ++k) {
      double t = u(rng);
      size_t i = 0;
      while (i + 1 < segments.size() && segments[i + 1].first <= t) ++i;
      bool near = false;
      for (double e : times) near |= std::fabs(e - t) < 1e-6;
      if (near) continue;
      ExtendedSpm frozen = segments[i].second.with_site(tr.at(t));
      ExtendedSpm fresh = build_spm(d, tr.at(t));
      CHECK(frozen.topology().same_as(fresh.topology()));
      CHECK(frozen.faces().size() == fresh.faces().size());
      for (int v = 0; v < p.size(); ++v)
        CHECK(std::fabs(frozen.vertex_distance(v) - fresh.vertex_distance(v)) <
              1e-9 * p.diameter());
      ++checked;
    }
    ExtendedSpm end = build_spm(d, tr.at(horizon));
    CHECK(cur.with_site(tr.at(horizon)).topology().same_as(end.topology()));
  }
  CHECK(checked > 300);
}
