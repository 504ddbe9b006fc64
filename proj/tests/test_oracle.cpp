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
#include "kgvd/geom/error.hpp"
#include "kgvd/oracle/events.hpp"
#include "kgvd/oracle/labels.hpp"
#include "kgvd/scenarios/shapes.hpp"

using namespace kgvd;

TEST_CASE("two symmetric sites split the square at x = 2") {
  oracle::VisibilityGraph vg(scenarios::square4());
  auto g = oracle::grid_labels(vg, {{1, 2}, {3, 2}}, 16, 1e-9);
  REQUIRE(g.points.size() == 256);
  const double cell = 4.0 / 16;
  for (size_t i = 0; i < g.points.size(); ++i) {
    if (std::fabs(g.points[i].x - 2) <= cell) continue;
    CHECK(g.label[i] == (g.points[i].x < 2 ? 0 : 1));
  }
  CHECK(g.unambiguous() == 256);
}

TEST_CASE("three sites give three wedges around the circumcenter") {
  oracle::VisibilityGraph vg(scenarios::square4());
  auto g = oracle::grid_labels(vg, {{1, 1}, {3, 1}, {2, 3}}, 64, 1e-9);
  int seen[3] = {0, 0, 0};
  for (size_t i = 0; i < g.points.size(); ++i) {
    if (dist(g.points[i], {2, 1.75}) < 0.2) ++seen[g.label[i]];
  }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);
}

TEST_CASE("grid resolution below 16 is refused") {
  oracle::VisibilityGraph vg(scenarios::square4());
  try {
    oracle::grid_labels(vg, {{1, 1}}, 8, 0);
    FAIL("accepted a coarse grid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kResolutionTooCoarse);
  }
}

TEST_CASE("ties are flagged ambiguous") {
  oracle::VisibilityGraph vg(scenarios::square4());
  // cell centers sit at odd multiples of 1/8, so x = 2.125 is a probe column
  auto g = oracle::grid_labels(vg, {{1.125, 2}, {3.125, 2}}, 16, 1e-9);
  int ambiguous = static_cast<int>(g.points.size()) - g.unambiguous();
  CHECK(ambiguous == 16);
}

TEST_CASE("equidistance residual") {
  oracle::VisibilityGraph vg(scenarios::l_shape());
  oracle::SourceDistances d(vg, {{3, 0.5}, {0.5, 3}});
  // the diagonal through the reflex corner is the bisector
  CHECK(oracle::equidistance_residual(d, 0, 1, {1, 1}) < 1e-12);
  CHECK(oracle::equidistance_residual(d, 0, 1, {1.5, 1.5}) < 1e-12);
  // off the bisector
  CHECK(oracle::equidistance_residual(d, 0, 1, {1.2, 1}) > 1e-3);
}

TEST_CASE("sampling oracle on a constant and a switching probe") {
  oracle::SamplingPlan plan;
  plan.time_samples = 100;
  CHECK(oracle::detect_events_by_bisection([](double) { return "a"; }, 0, 1,
                                           plan)
            .empty());
  auto t = oracle::detect_events_by_bisection(
      [](double x) { return x < 0.3 ? "a" : x < 0.7071 ? "b" : "c"; }, 0, 1,
      plan);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(t[1] == doctest::Approx(0.7071).epsilon(1e-8));
  auto m = oracle::match_times({0.3, 0.5}, t, 1e-6);
  CHECK(m.missed.size() == 1);
  CHECK(m.spurious.size() == 1);
}
