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

// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kgvd/bisector/tournament.hpp"
#include "kgvd/center/center.hpp"
#include "kgvd/cli/commands.hpp"
#include "kgvd/geom/shortest_path.hpp"
#include "kgvd/geom/triangulation.hpp"
#include "kgvd/gvd/forest.hpp"
#include "kgvd/oracle/visibility_graph.hpp"
#include "kgvd/scenarios/generators.hpp"
#include "kgvd/scenarios/shapes.hpp"
#include "kgvd/spm/spm.hpp"

using namespace kgvd;
using scenarios::Scenario;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("criterion %d: %s %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Runs a criterion; library errors count as failures.
void criterion(int id, const std::function<bool(std::string*)>& body) {
  std::string what;
  bool ok = false;
  try {
    ok = body(&what);
  } catch (const std::exception& e) {
    what += std::string(" error: ") + e.what();
  }
  report(id, ok, what);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool geodesic_kernel(std::string* what) {
  auto start = Clock::now();
  uint64_t state = 1234;
  int bad = 0, pairs = 0;
  double worst = 0;
  for (const Polygon& p : scenarios::test_polygons()) {
    Triangulation tri = triangulate(p);
    oracle::VisibilityGraph vg(p);
    for (int k = 0; k < 1000; ++k) {
      Point a = scenarios::random_interior_point(p, &state, 1e-6);
      Point b = scenarios::random_interior_point(p, &state, 1e-6);
      double ref = vg.distance(a, b);
      double err = std::fabs(geodesic_distance(tri, a, b) - ref);
      worst = std::max(worst, err / std::max(1.0, ref));
      if (err > 1e-9 * std::max(1.0, ref)) ++bad;
      ++pairs;
    }
  }
  double secs = since(start);
  *what = "geodesic kernel: " + std::to_string(pairs) + " pairs, " +
          std::to_string(bad) + " off by more than 1e-9, worst " +
          fmt("%.2e", worst) + ", " + fmt("%.2f", secs) + " s";
  return bad == 0 && secs < 10;
}

bool spm_invariants(std::string* what) {
  uint64_t state = 77;
  int area_bad = 0, dist_bad = 0, replay_bad = 0, replay_checked = 0;
  for (const Polygon& p : scenarios::test_polygons()) {
    DomainPtr d = make_domain(p);
    oracle::VisibilityGraph vg(p);
    for (int rep = 0; rep < 2; ++rep) {
      Point site = scenarios::random_interior_point(p, &state, 1e-3);
      ExtendedSpm s = build_spm(d, site);
      if (std::fabs(s.cells_area() - p.area()) >= 1e-6 * p.area()) ++area_bad;
      auto rd = vg.reflex_distances(site);
      for (int k = 0; k < 500; ++k) {
        Point x = scenarios::random_interior_point(p, &state, 0);
        if (std::fabs(s.distance(x) - vg.distance_with(site, rd, x)) >=
            d->eps_geom)
          ++dist_bad;
      }
    }
    // kinetic replay against scratch rebuilds
    Trajectory tr = scenarios::random_linear_motion(p, &state, 1e-2, 1);
    const double horizon = 0.999;
    ExtendedSpm cur = build_spm(d, tr.at(0));
    std::vector<std::pair<double, ExtendedSpm>> segs = {{0.0, cur}};
    std::vector<double> times;
    double now = 0;
    while (auto ev = next_spm_event(cur, tr, now, horizon)) {
      times.push_back(ev->time);
      cur = advance_spm(cur, *ev, tr);
      now = ev->time;
      segs.push_back({now, cur});
      if (times.size() > 10000) return false;
    }
    std::mt19937_64 rng(state);
    std::uniform_real_distribution<double> u(0, horizon);
    for (int k = 0; k < 100; ++k) {
      double t = u(rng);
      bool near = false;
      for (double e : times) near |= std::fabs(e - t) < 1e-6;
      if (near) continue;
      size_t i = 0;
      while (i + 1 < segs.size() && segs[i + 1].first <= t) ++i;
      ExtendedSpm frozen = segs[i].second.with_site(tr.at(t));
      ExtendedSpm fresh = build_spm(d, tr.at(t));
      bool same = frozen.topology().same_as(fresh.topology());
      for (int v = 0; v < p.size() && same; ++v)
        same = std::fabs(frozen.vertex_distance(v) - fresh.vertex_distance(v)) <
               d->eps_geom;
      replay_bad += !same;
      ++replay_checked;
    }
  }
  *what = "spm: area failures " + std::to_string(area_bad) +
          ", distance failures " + std::to_string(dist_bad) +
          ", kinetic replay " + std::to_string(replay_checked - replay_bad) +
          "/" + std::to_string(replay_checked) + " times agree";
  return area_bad == 0 && dist_bad == 0 && replay_bad == 0 &&
         replay_checked >= 900;
}

bool wineglass_soundness(std::string* what) {
  bool ok = true;
  std::string parts;
  for (int m : {2, 4, 8, 16}) {
    auto start = Clock::now();
    Scenario s = scenarios::gen_wineglass(m);
    cli::Settings naive;
    naive.mode = KdsMode::kNaive;
    cli::Settings resp;
    cli::VerifyPlan plan;
    plan.sampling.time_samples = 1000;
    cli::VerifyReport r = cli::verify_scenario(s, naive, plan);
    std::vector<cli::LogEntry> other = cli::run_log(s, s.t1, resp);
    bool same = other.size() == r.events.size();
    for (size_t i = 0; same && i < other.size(); ++i)
      same = other[i].kind == r.events[i].event.kind &&
             other[i].sites == r.events[i].event.sites &&
             std::fabs(other[i].t - r.events[i].event.t) <= 1e-9;
    double secs = since(start);
    bool here = r.match.ok() && r.rebuild_failures == 0 &&
                r.residual < 1e-8 && same && secs < 120;
    ok &= here;
    parts += " m=" + std::to_string(m) + ":" + std::to_string(r.events.size()) +
             "ev/" + std::to_string(r.oracle_times.size()) + "or miss=" +
             std::to_string(r.match.missed.size()) + " spur=" +
             std::to_string(r.match.spurious.size()) + " res=" +
             fmt("%.1e", r.residual) + (same ? " modes=same" : " modes=DIFFER") +
             " " + fmt("%.1fs", secs);
  }
  *what = "wineglass soundness:" + parts;
  return ok;
}

bool wineglass_growth(std::string* what) {
  std::vector<int64_t> c;
  std::string parts;
  for (int m : {2, 4, 8, 16}) {
    cli::CensusRow row = cli::census_row("wineglass", m, 2, cli::Settings{});
    int64_t v = 0;
    const auto& kinds = census_kinds();
    for (size_t i = 0; i < kinds.size(); ++i)
      if (kinds[i] == DiagramEventKind::kCollapse22 ||
          kinds[i] == DiagramEventKind::kExpand22)
        v += row.counts[i];
    c.push_back(v);
    parts += " " + std::to_string(v);
  }
  bool inc = true;
  for (size_t i = 1; i < c.size(); ++i) inc &= c[i] > c[i - 1];
  double ratio = c[2] > 0 ? std::log2(static_cast<double>(c[3]) / c[2]) : 0;
  *what = "wineglass 2,2 events for m=2,4,8,16:" + parts +
          ", log2 of last ratio " + fmt("%.2f", ratio);
  return inc && ratio >= 1.5;
}

std::string center_fingerprint(const Diagram& d) {
  std::string out;
  for (const DiagramCenter& c : d.centers())
    out += std::to_string(c.apex[0]) + "," + std::to_string(c.apex[1]) + "," +
           std::to_string(c.apex[2]) + ";";
  return out.empty() ? "none" : out;
}

int trace_breakpoints(int m) {
  Scenario s = scenarios::gen_center_swing(m);
  auto tr = s.trajectories();
  VoronoiCenterTracker t(make_domain(s.polygon), {tr[0], tr[1], tr[2]}, s.t0,
                         s.t1);
  return trace_center(t, s.t1, 100000).breakpoints();
}

bool center_checks(std::string* what) {
  // circumcenter in the square
  DomainPtr sq = make_domain(scenarios::square4());
  auto c = compute_center(build_spm(sq, {1, 1}), build_spm(sq, {3, 1}),
                          build_spm(sq, {2, 3}));
  double err = c ? dist(*c, {2, 1.75}) : 1e300;

  // swing: tracker events against the sampling oracle on center structure
  Scenario s = scenarios::gen_center_swing(4);
  auto tr = s.trajectories();
  DomainPtr d = make_domain(s.polygon);
  VoronoiCenterTracker t(d, {tr[0], tr[1], tr[2]}, s.t0, s.t1);
  std::vector<double> reported;
  while (auto e = t.next_event()) {
    if (reported.empty() || e->time - reported.back() > 1e-9)
      reported.push_back(e->time);
    t.handle_event(*e);
  }
  oracle::SamplingPlan plan;
  plan.time_samples = 1000;
  auto probe = [&](double when) { return center_fingerprint(t.build_at(when)); };
  auto oracle_times = oracle::detect_events_by_bisection(probe, s.t0, s.t1, plan);
  auto match = oracle::match_times(reported, oracle_times, 1e-6);

  int b4 = trace_breakpoints(4), b8 = trace_breakpoints(8);
  *what = "center: circumcenter error " + fmt("%.1e", err) + ", swing " +
          std::to_string(reported.size()) + " events vs " +
          std::to_string(oracle_times.size()) + " oracle (miss " +
          std::to_string(match.missed.size()) + ", spurious " +
          std::to_string(match.spurious.size()) + "), breakpoints m=4 " +
          std::to_string(b4) + " m=8 " + std::to_string(b8);
  return err < 1e-9 && match.ok() && !reported.empty() && b8 > b4;
}

struct SuiteResult {
  std::set<std::string> kinds;
  int events = 0, rebuild_failures = 0;
};

bool full_diagram(std::string* what, SuiteResult* suite) {
  auto start = Clock::now();
  struct Case {
    std::string name;
    int m, n;
    uint64_t seed;
  };
  const std::vector<std::pair<std::string, int>> min_n = {
      {"wineglass", 2},        {"center_swing", 3},
      {"pit_tshapes", 2},      {"pit_spikes", 3},
      {"pit_spikes_floor", 3}, {"mirrored_wineglasses", 4},
      {"grid_sweep", 2}};
  std::vector<Case> cases;
  for (const auto& [g, nmin] : min_n)
    for (int k : {2, 4}) cases.push_back({g, k, std::max(k, nmin), 1});
  const int rm[] = {12, 16, 20, 24, 32}, rn[] = {3, 4, 5, 6, 6};
  for (int i = 0; i < 5; ++i) cases.push_back({"random", rm[i], rn[i], 100u + i});

  int passed = 0;
  std::string failed;
  double worst_agree = 1, worst_area = 0;
  for (const Case& c : cases) {
    cli::Settings cfg;
    cfg.seed = c.seed;
    cli::VerifyPlan plan;
    plan.sampling.time_samples = 1000;
    bool ok = false;
    try {
      Scenario s = scenarios::generate(c.name, c.m, c.n, c.seed);
      cli::VerifyReport r = cli::verify_scenario(s, cfg, plan);
      ok = r.ok();
      worst_agree = std::min(worst_agree, r.agreement());
      worst_area = std::max(worst_area, r.area_error);
      for (const cli::EventCheck& e : r.events) {
        suite->kinds.insert(e.event.kind);
        ++suite->events;
      }
      suite->rebuild_failures += r.rebuild_failures;
    } catch (const std::exception& e) {
      failed += std::string(" [") + e.what() + "]";
    }
    if (ok)
      ++passed;
    else
      failed += " " + c.name + "(" + std::to_string(c.m) + "," +
                std::to_string(c.n) + ")";
  }
  double secs = since(start);
  *what = "full diagram verify: " + std::to_string(passed) + "/" +
          std::to_string(cases.size()) + " scenarios pass, worst agreement " +
          fmt("%.5f", worst_agree) + ", worst area error " +
          fmt("%.1e", worst_area) + ", " + fmt("%.0f", secs) + " s" +
          (failed.empty() ? "" : ", failing:" + failed);
  return passed == static_cast<int>(cases.size()) && secs < 600;
}

bool event_kinds(const SuiteResult& suite, std::string* what) {
  std::string missing;
  for (DiagramEventKind k : census_kinds())
    if (!suite.kinds.count(diagram_event_name(k)))
      missing += std::string(" ") + diagram_event_name(k);
  *what = "event kinds: " + std::to_string(suite.kinds.size()) + "/" +
          std::to_string(kDiagramEventKinds) + " kinds over " +
          std::to_string(suite.events) + " events, rebuild failures " +
          std::to_string(suite.rebuild_failures) +
          (missing.empty() ? "" : ", missing:" + missing);
  return missing.empty() && suite.rebuild_failures == 0;
}

double walk_length(const DynamicSpmForest& f, int v) {
  double s = 0;
  for (int u = v; f.parent(u) >= 0; u = f.parent(u))
    s += dist(f.position(u), f.position(f.parent(u)));
  return s;
}

bool forest_ops(std::string* what) {
  auto start = Clock::now();
  const int n = 500;
  DynamicSpmForest f(n);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0, 100);
  for (int i = 0; i < n; ++i) f.set_position(i, {u(rng), u(rng)});
  int mismatches = 0, queries = 0;
  for (int step = 0; step < 100000; ++step) {
    int v = static_cast<int>(rng() % n), w = static_cast<int>(rng() % n);
    int op = static_cast<int>(rng() % 4);
    if (op == 0 && f.parent(v) < 0 && v != w) {
      // a cycle must be refused; anything else must link
      int r = w;
      while (f.parent(r) >= 0) r = f.parent(r);
      bool cycle = r == v;
      try {
        f.link(w, v, dist(f.position(v), f.position(w)));
        mismatches += cycle;
      } catch (const Error& e) {
        mismatches += !(cycle && e.kind() == ErrorKind::kLinkCycle);
      }
    } else if (op == 1 && f.parent(v) >= 0) {
      f.cut(v);
    } else if (op == 2) {
      ++queries;
      if (std::fabs(f.path_length(v) - walk_length(f, v)) > 1e-9) ++mismatches;
      int r = v;
      while (f.parent(r) >= 0) r = f.parent(r);
      if (f.root(v) != r) ++mismatches;
    } else if (f.parent(v) >= 0) {
      int pc = f.principal_child(v);
      if (f.children(v).empty() != (pc < 0)) ++mismatches;
      if (pc >= 0) {
        Vec in = f.position(v) - f.position(f.parent(v));
        auto turn = [&](int c) {
          Vec out = f.position(c) - f.position(v);
          return std::fabs(std::atan2(cross(in, out), dot(in, out)));
        };
        for (int c : f.children(v))
          if (turn(c) < turn(pc)) ++mismatches;
      }
    }
  }
  double secs = since(start);
  *what = "forest: 100000 operations, " + std::to_string(queries) +
          " path queries, " + std::to_string(mismatches) + " mismatches, " +
          fmt("%.2f", secs) + " s";
  return mismatches == 0 && secs < 5;
}

bool tournament_sequences(std::string* what) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> U(-10, 10);
  int mismatches = 0;
  int64_t ops = 0;
  for (int seq = 0; seq < 10000; ++seq) {
    std::vector<OffsetTournament> ts(1);
    int64_t next_id = 0;
    const int len = 1 + static_cast<int>(rng() % 40);
    for (int step = 0; step < len; ++step, ++ops) {
      int which = static_cast<int>(rng() % ts.size());
      OffsetTournament& t = ts[which];
      int op = static_cast<int>(rng() % 10);
      if (op < 6 || t.empty()) {
        t.insert({U(rng), next_id++, U(rng), U(rng)});
      } else if (op < 9) {
        auto all = t.entries();
        t.remove(all[rng() % all.size()]);
      } else {
        ts.push_back(t.split(U(rng)));
      }
      for (const OffsetTournament& x : ts) {
        if (x.empty()) continue;
        auto all = x.entries();
        double ref = flat_max(all, x.root_entry()->anchor);
        if (std::fabs(*x.root_max() - ref) > 1e-12 * std::max(1.0, std::fabs(ref)))
          ++mismatches;
        for (size_t i = 1; i < all.size(); ++i)
          if (all[i - 1].key > all[i].key) ++mismatches;
      }
    }
  }
  *what = "tournament: 10000 sequences, " + std::to_string(ops) +
          " operations, " + std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

}  // namespace

int main() {
  criterion(1, geodesic_kernel);
  criterion(2, spm_invariants);
  criterion(3, wineglass_soundness);
  criterion(4, wineglass_growth);
  criterion(5, center_checks);
  SuiteResult suite;
  criterion(6, [&](std::string* w) { return full_diagram(w, &suite); });
  criterion(7, [&](std::string* w) { return event_kinds(suite, w); });
  criterion(8, forest_ops);
  criterion(9, tournament_sequences);
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
