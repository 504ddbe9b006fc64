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
#include "kgvd/bisector/kds.hpp"
#include "kgvd/geom/error.hpp"
#include "kgvd/oracle/events.hpp"
#include "kgvd/scenarios/shapes.hpp"

using namespace kgvd;

namespace {

std::string static_fingerprint(const DomainPtr& d, const Trajectory& p,
                               const Trajectory& q, double t) {
  return build_bisector(build_spm(d, p.at(t)), build_spm(d, q.at(t)))
      .fingerprint_string();
}

std::vector<double> oracle_times(const DomainPtr& d, const Trajectory& p,
                                 const Trajectory& q, double t0, double t1) {
  oracle::SamplingPlan plan;
  plan.time_samples = 1000;
  plan.eps_time = 1e-10;
  return oracle::detect_events_by_bisection(
      [&](double t) { return static_fingerprint(d, p, q, t); }, t0, t1, plan);
}

std::vector<double> times(const std::vector<BisectorEvent>& log) {
  std::vector<double> out;
  for (const auto& e : log) out.push_back(e.time);
  return out;
}

}  // namespace

TEST_CASE("static sites produce no events") {
  DomainPtr d = make_domain(scenarios::l_shape());
  BisectorKds k(d, {{1, 3.2}, {0, 0}}, {{3.5, 1}, {0, 0}}, 0, 10,
                KdsMode::kResponsive);
  CHECK_FALSE(k.next_event());
  CHECK(k.run().empty());
}

TEST_CASE("square: site leaves before the bisector reaches a corner") {
  DomainPtr d = make_domain(scenarios::square4());
  BisectorKds k(d, {{1, 2}, {0, 0}}, {{3, 2}, {1, 0}}, 0, 5, KdsMode::kNaive);
  // the oracle sees no change before the exit at t = 1
  CHECK(oracle_times(d, {{1, 2}, {0, 0}}, {{3, 2}, {1, 0}}, 0, 0.999).empty());
  try {
    k.next_event();
    FAIL("expected an exit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSiteExitsPolygon);
  }
  BisectorKds short_run(d, {{1, 2}, {0, 0}}, {{3, 2}, {1, 0}}, 0, 0.9,
                        KdsMode::kNaive);
  CHECK(short_run.run().empty());
}

TEST_CASE("stale events are rejected") {
  DomainPtr d = make_domain(scenarios::square4());
  BisectorKds k(d, {{1, 2}, {0, 0}}, {{3, 1.5}, {0, 1}}, 0, 2, KdsMode::kNaive);
  auto ev = k.next_event();
  REQUIRE(ev);
  BisectorEvent fake = *ev;
  fake.time -= 0.5;
  CHECK_THROWS_AS(k.handle_event(fake), Error);
  k.handle_event(*ev);
  try {
    k.handle_event(*ev);
    FAIL("expected a stale event");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kStaleEvent);
  }
}

TEST_CASE("events match the sampling oracle and both modes agree") {
  auto polys = scenarios::test_polygons();
  int with_events = 0;
  for (int pi : {1, 3, 6, 7}) {
    DomainPtr d = make_domain(polys[pi]);
    uint64_t st = 400 + pi;
    for (int trial = 0; trial < 2; ++trial) {
      Trajectory p = scenarios::random_linear_motion(polys[pi], &st, 1e-2, 1);
      Trajectory q = scenarios::random_linear_motion(polys[pi], &st, 1e-2, 1);
      BisectorKds naive(d, p, q, 0, 1, KdsMode::kNaive);
      BisectorKds resp(d, p, q, 0, 1, KdsMode::kResponsive);
      std::vector<BisectorEvent> log;
      double last = 0;
      std::string fp = naive.bisector().fingerprint_string();
      while (auto ev = naive.next_event()) {
        // kinetic soundness between events; compound events share a time
        if (ev->time > last + 1e-6)
          for (double f : {0.25, 0.5, 0.75}) {
            double t = last + f * (ev->time - last);
            CHECK(static_fingerprint(d, p, q, t) == fp);
          }
        log.push_back(*ev);
        naive.handle_event(*ev);
        last = ev->time;
        fp = naive.bisector().fingerprint_string();
      }
      auto rlog = resp.run();
      REQUIRE(rlog.size() == log.size());
      for (size_t i = 0; i < log.size(); ++i) {
        CHECK(rlog[i].kind == log[i].kind);
        CHECK(rlog[i].time == doctest::Approx(log[i].time).epsilon(1e-9));
      }
      auto m = oracle::match_times(times(log), oracle_times(d, p, q, 0, 1), 1e-6);
      CHECK(m.missed.empty());
      CHECK(m.spurious.empty());
      with_events += !log.empty();
    }
  }
  CHECK(with_events >= 4);
}

TEST_CASE("motion updates") {
  DomainPtr d = make_domain(scenarios::square4());
  Trajectory p{{1, 2}, {0, 0}}, q{{3, 1.5}, {0, 1}};
  SUBCASE("same velocity is a no-op") {
    BisectorKds k(d, p, q, 0, 2, KdsMode::kResponsive);
    auto t0 = k.next_failure_time();
    int64_t before = k.stats().guards_computed;
    k.update_motion(1, {0, 1}, 0.1);
    CHECK(k.next_failure_time() == t0);
    CHECK(k.stats().guards_computed == before);
  }
  SUBCASE("reversed velocity matches the mirrored oracle") {
    BisectorKds k(d, p, q, 0, 2, KdsMode::kNaive);
    k.update_motion(1, {0, -1}, 0.2);
    auto ev = k.next_event();
    REQUIRE(ev);
    Trajectory q2 = q.with_velocity(0.2, {0, -1});
    // q reaches the bottom edge at t = 1.9
    auto ot = oracle_times(d, p, q2, 0.2, 1.8);
    REQUIRE_FALSE(ot.empty());
    CHECK(ev->time == doctest::Approx(ot[0]).epsilon(1e-6));
  }
  SUBCASE("update at the start equals a fresh structure") {
    BisectorKds k(d, p, q, 0, 2, KdsMode::kNaive);
    k.update_motion(0, {0.5, 0.25}, 0);
    BisectorKds fresh(d, {{1, 2}, {0.5, 0.25}}, q, 0, 2, KdsMode::kNaive);
    auto a = k.run(), b = fresh.run();
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].kind == b[i].kind);
      CHECK(a[i].time == doctest::Approx(b[i].time).epsilon(1e-9));
    }
  }
}

TEST_CASE("change classification") {
  Bisector a, b;
  a.start.edge = b.start.edge = 0;
  a.end.edge = b.end.edge = 2;
  a.vertices = {{0, 5, {}, 0, 0}, {1, 7, {}, 0, 0}};
  b.vertices = {{1, 7, {}, 0, 0}, {0, 5, {}, 0, 0}};
  auto ev = classify_bisector_change(a, b, 1.0, 10);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].kind == BisectorEventKind::kCollapse22);
  CHECK(ev[1].kind == BisectorEventKind::kExpand22);
  b.vertices = {{0, 5, {}, 0, 0}, {1, 7, {}, 0, 0}, {0, 3, {}, 0, 0}};
  ev = classify_bisector_change(a, b, 1.0, 10);
  REQUIRE(ev.size() == 1);
  CHECK(ev[0].kind == BisectorEventKind::kExpand12);
  ev = classify_bisector_change(b, a, 1.0, 10);
  REQUIRE(ev.size() == 1);
  CHECK(ev[0].kind == BisectorEventKind::kCollapse12);
  // endpoint jumps across vertex 1 and a new crossing appears next to it
  Bisector c = a;
  c.start.edge = 1;
  c.vertices.insert(c.vertices.begin(), {1, 1, {}, 0, 0});
  ev = classify_bisector_change(a, c, 1.0, 10);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].kind == BisectorEventKind::kVertex);
  CHECK(ev[0].vertex == 1);
  CHECK(ev[1].kind == BisectorEventKind::kExpand12);
}
