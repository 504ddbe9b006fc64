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
#include "kgvd/center/center.hpp"
#include "kgvd/geom/error.hpp"
#include "kgvd/oracle/events.hpp"
#include "kgvd/scenarios/generators.hpp"
#include "kgvd/scenarios/shapes.hpp"

using namespace kgvd;

namespace {

std::optional<Point> center_of(const Polygon& p, Point a, Point b, Point c) {
  DomainPtr d = make_domain(p);
  return compute_center(build_spm(d, a), build_spm(d, b), build_spm(d, c));
}

}  // namespace

TEST_CASE("circumcenter of a visible triple") {
  auto c = center_of(scenarios::square4(), {1, 1}, {3, 1}, {2, 3});
  REQUIRE(c);
  CHECK(dist(*c, {2, 1.75}) < 1e-9);
}

TEST_CASE("center of a flat triple") {
  // on x = 2: 1 + (y - 2)^2 = (y - 0.1)^2
  auto c = center_of(scenarios::square4(), {1, 2}, {3, 2}, {2, 0.1});
  REQUIRE(c);
  CHECK(c->x == doctest::Approx(2).epsilon(1e-9));
  CHECK(c->y == doctest::Approx(4.99 / 3.8).epsilon(1e-9));
}

TEST_CASE("center outside the polygon is absent") {
  // circumcenter far below the square
  CHECK(!center_of(scenarios::square4(), {1, 3.9}, {3, 3.9}, {2, 3.95}));
}

TEST_CASE("L-shape: hidden site reaches the center around the corner") {
  const Polygon p = scenarios::l_shape();
  DomainPtr d = make_domain(p);
  ExtendedSpm a = build_spm(d, {3.6, 1.6}), b = build_spm(d, {0.4, 3.6}),
              c = build_spm(d, {1.6, 0.3});
  auto x = compute_center(a, b, c);
  REQUIRE(x);
  double da = a.distance(*x), db = b.distance(*x), dc = c.distance(*x);
  CHECK(std::fabs(da - db) < 1e-9 * p.diameter());
  CHECK(std::fabs(da - dc) < 1e-9 * p.diameter());
  CHECK(!p.segment_inside({3.6, 1.6}, *x, 0));
}

TEST_CASE("static sites: no events and a constant trace") {
  DomainPtr d = make_domain(scenarios::square4());
  VoronoiCenterTracker t(d, {Trajectory{{1, 1}, {0, 0}, 0},
                             Trajectory{{3, 1}, {0, 0}, 0},
                             Trajectory{{2, 3}, {0, 0}, 0}},
                         0, 1);
  CenterTrace tr = trace_center(t, 1, 10);
  CHECK(tr.breakpoints() == 0);
  REQUIRE(tr.pieces.size() == 1);
  for (const auto& [when, x] : tr.pieces[0]) CHECK(dist(x, {2, 1.75}) < 1e-9);
}

TEST_CASE("square: center leaves through the top edge") {
  DomainPtr d = make_domain(scenarios::square4());
  VoronoiCenterTracker t(d, {Trajectory{{1, 1}, {0, 0}, 0},
                             Trajectory{{3, 1}, {0, 0}, 0},
                             Trajectory{{2, 0.5}, {0, 1}, 0}},
                         0, 0.45);
  // center height (2 - y^2) / (2 (1 - y)) reaches 4 when y = 4 - sqrt(10)
  const double expect = 4 - std::sqrt(10.0) - 0.5;
  auto e = t.next_event();
  REQUIRE(e);
  CHECK(e->kind == DiagramEventKind::kCollapse13);
  CHECK(std::fabs(e->time - expect) < 1e-6);
  t.handle_event(*e);
  CHECK(!t.center());
  CenterTrace rest = trace_center(t, 0.45, 10);
  CHECK(rest.breakpoints() == 0);
}

TEST_CASE("swing scenario: events match the oracle, breakpoints grow") {
  auto run = [](int m) {
    scenarios::Scenario s = scenarios::gen_center_swing(m);
    auto tr = s.trajectories();
    VoronoiCenterTracker t(make_domain(s.polygon), {tr[0], tr[1], tr[2]},
                           s.t0, s.t1);
    return trace_center(t, s.t1, 1000);
  };
  CenterTrace t4 = run(4), t8 = run(8);
  CHECK(t8.breakpoints() > t4.breakpoints());

  scenarios::Scenario s = scenarios::gen_center_swing(8);
  auto tr = s.trajectories();
  VoronoiCenterTracker t(make_domain(s.polygon), {tr[0], tr[1], tr[2]}, s.t0,
                         s.t1);
  auto probe = [&](double when) {
    Diagram d = t.build_at(when);
    if (d.centers().empty()) return std::string("none");
    auto a = d.centers()[0].apex;
    return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
           std::to_string(a[2]);
  };
  oracle::SamplingPlan plan;
  plan.time_samples = 1000;
  auto truth = oracle::detect_events_by_bisection(probe, s.t0, s.t1, plan);
  std::vector<double> got;
  for (const CenterEvent& e : t8.events)
    if (got.empty() || e.time - got.back() > 1e-9) got.push_back(e.time);
  auto m = oracle::match_times(got, truth, 1e-6);
  CHECK(m.missed.empty());
  CHECK(m.spurious.empty());
  // pieces sample the center equidistant from all three sites
  for (const auto& piece : t8.pieces)
    for (const auto& [when, x] : piece) {
      Diagram d = t.build_at(when);
      double a = d.spm(0).distance(x), b = d.spm(1).distance(x),
             c = d.spm(2).distance(x);
      CHECK(std::fabs(a - b) < 1e-9 * s.polygon.diameter());
      CHECK(std::fabs(a - c) < 1e-9 * s.polygon.diameter());
    }
}
