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
#include <set>

#include "doctest.h"
#include "kgvd/bisector/kds.hpp"
#include "kgvd/cli/commands.hpp"
#include "kgvd/geom/error.hpp"
#include "kgvd/gvd/kds.hpp"
#include "kgvd/oracle/events.hpp"
#include "kgvd/scenarios/generators.hpp"
#include "kgvd/scenarios/shapes.hpp"

using namespace kgvd;

namespace {

std::vector<double> distinct_times(const std::vector<DiagramEvent>& log) {
  std::vector<double> out;
  for (const DiagramEvent& e : log)
    if (out.empty() || e.time - out.back() > 1e-9) out.push_back(e.time);
  return out;
}

}  // namespace

TEST_CASE("static sites give an empty log") {
  Polygon p = scenarios::l_shape();
  std::vector<Trajectory> sites = {{{3.4, 0.6}, {0, 0}, 0},
                                   {{0.5, 3.3}, {0, 0}, 0},
                                   {{1, 1}, {0, 0}, 0}};
  DiagramKds k(make_domain(p), sites, 0, 1);
  CHECK(k.run().empty());
}

TEST_CASE("random scenarios match the sampling oracle") {
  int with_events = 0;
  for (uint64_t seed : {3u, 8u, 13u}) {
    scenarios::Scenario s = scenarios::random_scenario(16, 4, seed);
    DomainPtr d = make_domain(s.polygon);
    DiagramKds k(d, s.trajectories(), s.t0, s.t1);
    std::vector<DiagramEvent> log;
    bool forest_ok = true;
    while (auto e = k.next_event()) {
      log.push_back(*e);
      k.handle_event(*e);
      forest_ok = forest_ok && k.forest_consistent(1e-9 * s.polygon.diameter());
    }
    CHECK(forest_ok);
    oracle::SamplingPlan plan;
    plan.time_samples = 1000;
    auto truth = oracle::detect_events_by_bisection(
        [&](double t) { return k.build_at(t).fingerprint(); }, s.t0, s.t1, plan);
    auto m = oracle::match_times(distinct_times(log), truth, 1e-6);
    CHECK(m.missed.empty());
    CHECK(m.spurious.empty());
    with_events += !log.empty();
  }
  CHECK(with_events >= 2);
}

TEST_CASE("two-site square: diagram log equals the bisector log") {
  Polygon p = scenarios::square4();
  DomainPtr d = make_domain(p);
  Trajectory a{{0.5, 0.7}, {2.5, 0.4}, 0}, b{{3.4, 3.1}, {-0.6, -2.2}, 0};
  DiagramKds gvd(d, {a, b}, 0, 1);
  BisectorKds bis(d, a, b, 0, 1, KdsMode::kResponsive);
  auto g = gvd.run();
  auto h = bis.run();
  REQUIRE(g.size() == h.size());
  CHECK(!g.empty());
  for (size_t i = 0; i < g.size(); ++i) {
    CHECK(std::string(diagram_event_name(g[i].kind)) ==
          bisector_event_name(h[i].kind));
    CHECK(g[i].time == doctest::Approx(h[i].time).epsilon(1e-9));
  }
}

TEST_CASE("spiked pit: first event is confirmed by the oracle") {
  scenarios::Scenario s = scenarios::gen_pit_spikes(8, 3);
  DiagramKds k(make_domain(s.polygon), s.trajectories(), s.t0, s.t1);
  auto first = k.next_event();
  REQUIRE(first);
  oracle::SamplingPlan plan;
  plan.time_samples = 1000;
  auto truth = oracle::detect_events_by_bisection(
      [&](double t) { return k.build_at(t).fingerprint(); }, s.t0, s.t1, plan);
  REQUIRE(!truth.empty());
  CHECK(std::fabs(first->time - truth.front()) < 1e-6);
}

namespace {

struct Step {
  DiagramEvent ev;
  int d2_before, d2_after, d3_before, d3_after;
  bool lone = true;  // only event at its instant
};

std::vector<Step> steps_of(const scenarios::Scenario& s) {
  DiagramKds k(make_domain(s.polygon), s.trajectories(), s.t0, s.t1);
  std::vector<Step> steps;
  while (auto e = k.next_event()) {
    Step st{*e, k.diagram().degree2_count(), 0, k.diagram().degree3_count(), 0};
    k.handle_event(*e);
    st.d2_after = k.diagram().degree2_count();
    st.d3_after = k.diagram().degree3_count();
    // compound instants report several events against one rebuild
    if (!steps.empty() && steps.back().ev.time > e->time - 1e-9)
      st.lone = steps.back().lone = false;
    steps.push_back(st);
  }
  return steps;
}

}  // namespace

TEST_CASE("a lone 1,2-collapse removes one degree-2 vertex") {
  int lone = 0;
  for (const Step& st : steps_of(scenarios::gen_pit_tshapes(4, 4))) {
    if (!st.lone || st.ev.kind != DiagramEventKind::kCollapse12) continue;
    CHECK(st.d2_after == st.d2_before - 1);
    ++lone;
  }
  CHECK(lone > 0);
}

TEST_CASE("3,3 flips keep the number of centers") {
  std::set<std::string> kinds;
  for (const Step& st : steps_of(scenarios::gen_pit_spikes(4, 4, true))) {
    kinds.insert(diagram_event_name(st.ev.kind));
    if (st.lone && (st.ev.kind == DiagramEventKind::kCollapse33 ||
                    st.ev.kind == DiagramEventKind::kExpand33))
      CHECK(st.d3_after == st.d3_before);
  }
  CHECK(kinds.count("Collapse33"));
  CHECK(kinds.count("Expand33"));
}

TEST_CASE("event budget") {
  scenarios::Scenario s = scenarios::gen_pit_spikes(4, 4);
  DiagramKdsOptions opt;
  opt.event_budget = 3;
  DiagramKds k(make_domain(s.polygon), s.trajectories(), s.t0, s.t1, opt);
  try {
    k.run();
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEventBudgetExceeded);
  }
}

TEST_CASE("stale events are rejected") {
  scenarios::Scenario s = scenarios::gen_grid_sweep(4, 3);
  DiagramKds k(make_domain(s.polygon), s.trajectories(), s.t0, s.t1);
  auto e = k.next_event();
  REQUIRE(e);
  k.handle_event(*e);
  CHECK_THROWS_AS(k.handle_event(*e), Error);
}
