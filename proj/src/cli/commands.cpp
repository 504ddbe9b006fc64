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

#include "kgvd/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "kgvd/oracle/labels.hpp"
#include "kgvd/oracle/visibility_graph.hpp"
#include "kgvd/scenarios/generators.hpp"

namespace kgvd::cli {

using nlohmann::json;
using scenarios::Scenario;

namespace {

// Shortest decimal text that reads back to the same double.
std::string num(double x) {
  char buf[32];
  for (int p = 15; p <= 17; ++p) {
    std::snprintf(buf, sizeof buf, "%.*g", p, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string num9(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t)
      .count();
}

}  // namespace

std::string to_jsonl(const LogEntry& e) {
  // json would print t with its own float format; keep round-trip digits
  std::string out = "{\"t\":" + num(e.t) + ",\"kind\":" + json(e.kind).dump() +
                    ",\"sites\":" + json(e.sites).dump() + ",\"detail\":";
  json d = json::parse(e.detail, nullptr, false);
  out += (d.is_object() ? d.dump() : json::object().dump()) + "}";
  return out;
}

DomainPtr make_scenario_domain(const Scenario& s, const Settings& cfg) {
  auto d = std::make_shared<Domain>(*make_domain(s.polygon));
  d->eps_geom = cfg.eps_geom * s.polygon.diameter();
  return d;
}

Simulation::Simulation(const Scenario& s, double horizon, const Settings& cfg)
    : dom_(make_scenario_domain(s, cfg)),
      traj_(s.trajectories()),
      ids_(s.ids()),
      horizon_(horizon) {
  if (!(horizon >= s.t0) || horizon > s.t1)
    throw Error(ErrorKind::kInvalidArgument,
                "horizon " + num(horizon) + " outside [" + num(s.t0) + ", " +
                    num(s.t1) + "]");
  if (s.n() == 2) {
    bis_ = std::make_unique<BisectorKds>(dom_, traj_[0], traj_[1], s.t0,
                                         horizon, cfg.mode);
  } else {
    DiagramKdsOptions opt;
    opt.event_budget = cfg.event_budget;
    gvd_ = std::make_unique<DiagramKds>(dom_, traj_, s.t0, horizon, opt);
  }
}

Simulation::~Simulation() = default;

double Simulation::now() const { return bis_ ? bis_->now() : gvd_->now(); }

LogEntry Simulation::entry(const DiagramEvent& e) const {
  LogEntry out{e.time, diagram_event_name(e.kind), {}, e.detail};
  for (int i : e.sites) out.sites.push_back(ids_[i]);
  return out;
}

LogEntry Simulation::entry(const BisectorEvent& e) const {
  json d = {{"vertex", e.vertex}};
  if (e.owner >= 0) d["owner"] = ids_[e.owner];
  if (!e.detail.empty()) d["note"] = e.detail;
  return LogEntry{e.time, bisector_event_name(e.kind), {ids_[0], ids_[1]},
                  d.dump()};
}

std::optional<LogEntry> Simulation::peek() {
  if (bis_) {
    if (!bis_next_) bis_next_ = bis_->next_event();
    if (!bis_next_) return std::nullopt;
    return entry(*bis_next_);
  }
  if (!gvd_next_) gvd_next_ = gvd_->next_event();
  if (!gvd_next_) return std::nullopt;
  return entry(*gvd_next_);
}

void Simulation::handle() {
  if (bis_) {
    if (!bis_next_) return;
    bis_->handle_event(*bis_next_);
    bis_next_.reset();
  } else {
    if (!gvd_next_) return;
    gvd_->handle_event(*gvd_next_);
    gvd_next_.reset();
  }
}

std::string Simulation::fingerprint() const {
  return bis_ ? bis_->bisector().fingerprint_string()
              : gvd_->diagram().fingerprint();
}

std::vector<Point> Simulation::positions(double t) const {
  std::vector<Point> out;
  for (const Trajectory& tr : traj_) out.push_back(tr.at(t));
  return out;
}

Diagram Simulation::diagram_at(double t) const {
  std::vector<SpmPtr> spms;
  for (const Point& x : positions(t)) {
    auto s = std::make_shared<ExtendedSpm>(build_spm(dom_, x));
    s->time = t;
    spms.push_back(s);
  }
  return Diagram::build(dom_, spms);
}

std::string Simulation::rebuilt_fingerprint(double t) const {
  if (bis_) {
    return build_bisector(build_spm(dom_, traj_[0].at(t)),
                          build_spm(dom_, traj_[1].at(t)))
        .fingerprint_string();
  }
  return diagram_at(t).fingerprint();
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kEventBudgetExceeded: return 3;
    case ErrorKind::kSchema:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kNonSimplePolygon:
    case ErrorKind::kPointOutsidePolygon:
    case ErrorKind::kSiteOnBoundary:
    case ErrorKind::kResolutionTooCoarse:
      return 1;
    default: return 2;
  }
}

std::vector<LogEntry> run_log(const Scenario& s, double horizon,
                              const Settings& cfg) {
  Simulation sim(s, horizon, cfg);
  std::vector<LogEntry> out;
  while (auto e = sim.peek()) {
    out.push_back(*e);
    sim.handle();
  }
  return out;
}

bool VerifyReport::ok() const {
  return match.ok() && rebuild_failures == 0 && soundness_failures == 0 &&
         agreement() >= 0.999 && area_error < 1e-6 && residual < 1e-8;
}

namespace {

// Labels, partition and residuals of the static diagram at t.
void check_snapshot(const Simulation& sim, const oracle::VisibilityGraph& vg,
                    double t, const VerifyPlan& plan, VerifyReport* r) {
  const Domain& dom = sim.domain();
  const double diam = dom.polygon().diameter();
  Diagram d = sim.diagram_at(t);
  std::vector<Point> sites = sim.positions(t);

  oracle::GridLabels g =
      oracle::grid_labels(vg, sites, plan.grid, dom.eps_geom);
  for (size_t i = 0; i < g.points.size(); ++i) {
    ++r->probes;
    if (g.ambiguous[i]) continue;
    ++r->unambiguous;
    if (d.cell_label(g.points[i]) == g.label[i]) ++r->agree;
  }

  double area = 0;
  for (int i = 0; i < d.n(); ++i) area += d.cell_area(i);
  r->area_error = std::max(
      r->area_error, std::abs(area - dom.polygon().area()) / dom.polygon().area());

  oracle::SourceDistances dist(vg, sites);
  for (size_t e = 0; e < d.edges().size(); ++e) {
    const DiagramEdge& de = d.edges()[e];
    std::vector<Point> line = d.edge_polyline(static_cast<int>(e), dom.eps_geom);
    const int k = static_cast<int>(line.size());
    const int step = std::max(1, k / plan.residual_samples);
    for (int i = 0; i < k; i += step)
      r->residual = std::max(
          r->residual,
          oracle::equidistance_residual(dist, de.p, de.q, line[i]) / diam);
  }
  for (const DiagramCenter& c : d.centers())
    for (int a = 0; a < 3; ++a)
      r->residual = std::max(
          r->residual, oracle::equidistance_residual(dist, c.sites[a],
                                                     c.sites[(a + 1) % 3], c.x) /
                           diam);
}

}  // namespace

VerifyReport verify_scenario(const Scenario& s, const Settings& cfg,
                             const VerifyPlan& plan) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  Simulation sim(s, s.t1, cfg);
  oracle::VisibilityGraph vg(s.polygon);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> when(s.t0, s.t1);
  std::vector<double> checks;
  for (int i = 0; i < plan.check_times; ++i) checks.push_back(when(rng));
  std::sort(checks.begin(), checks.end());
  size_t next_check = 0;

  // Rebuild check after each handled event, done once the gap to the next
  // event is known.
  std::optional<std::pair<double, std::string>> pending;
  auto settle = [&](double t_next) {
    if (!pending) return;
    double gap = t_next - pending->first;
    double eps = std::min(1e-6, 0.5 * gap);
    if (eps > 1e-12) {
      bool ok = sim.rebuilt_fingerprint(pending->first + eps) == pending->second;
      if (!ok) {
        r.events.back().rebuild_ok = false;
        ++r.rebuild_failures;
      }
    }
    pending.reset();
  };
  auto run_checks = [&](double t_next) {
    for (; next_check < checks.size() && checks[next_check] < t_next;
         ++next_check) {
      double tc = checks[next_check];
      if (t_next - tc < 1e-6 || tc - sim.now() < 1e-6) continue;
      ++r.soundness_checks;
      if (sim.rebuilt_fingerprint(tc) != sim.fingerprint())
        ++r.soundness_failures;
      check_snapshot(sim, vg, tc, plan, &r);
    }
  };

  int index = 0;
  std::optional<double> dropped;
  while (auto e = sim.peek()) {
    settle(e->t);
    run_checks(e->t);
    if (index++ == plan.drop_event) dropped = e->t;
    if (dropped && std::abs(e->t - *dropped) <= cfg.eps_time) {
      // handled but never logged, as if that instant had no handler
      sim.handle();
      continue;
    }
    r.events.push_back({*e});
    sim.handle();
    pending = std::make_pair(e->t, sim.fingerprint());
  }
  settle(s.t1);
  run_checks(std::numeric_limits<double>::infinity());

  std::vector<double> reported;
  for (const EventCheck& c : r.events)
    if (reported.empty() || c.event.t - reported.back() > cfg.eps_time)
      reported.push_back(c.event.t);
  oracle::SamplingPlan sp = plan.sampling;
  sp.eps_time = cfg.eps_time;
  sp.seed = cfg.seed;
  r.oracle_times = oracle::detect_events_by_bisection(
      [&](double t) { return sim.rebuilt_fingerprint(t); }, s.t0, s.t1, sp);
  r.match = oracle::match_times(reported, r.oracle_times, plan.match_tol);
  for (EventCheck& c : r.events) {
    double best = std::numeric_limits<double>::infinity();
    for (double o : r.oracle_times) best = std::min(best, std::abs(o - c.event.t));
    c.offset = best;
    c.matched = best <= plan.match_tol;
  }
  r.seconds = seconds_since(start);
  return r;
}

void print_report(const VerifyReport& r, std::ostream& out) {
  for (const EventCheck& c : r.events) {
    out << (c.matched ? "match " : "SPURIOUS ") << num9(c.event.t) << ' '
        << c.event.kind;
    for (const std::string& id : c.event.sites) out << ' ' << id;
    out << " offset=" << num9(c.offset);
    if (!c.rebuild_ok) out << " REBUILD-MISMATCH";
    out << '\n';
  }
  for (double t : r.match.missed) out << "MISSED " << num9(t) << '\n';
  out << "events=" << r.events.size() << " oracle=" << r.oracle_times.size()
      << " missed=" << r.match.missed.size()
      << " spurious=" << r.match.spurious.size()
      << " max_offset=" << num9(r.match.max_offset) << '\n';
  out << "rebuild_failures=" << r.rebuild_failures
      << " soundness=" << r.soundness_checks - r.soundness_failures << '/'
      << r.soundness_checks << '\n';
  out << "labels=" << r.agree << '/' << r.unambiguous << " ("
      << r.probes - r.unambiguous << " ambiguous) agreement="
      << num9(r.agreement()) << '\n';
  out << "area_error=" << num9(r.area_error)
      << " max_residual=" << num9(r.residual) << '\n';
  out << (r.ok() ? "PASS" : "FAIL") << '\n';
}

std::string census_header() {
  std::string h = "generator,m,n";
  for (DiagramEventKind k : census_kinds()) h += std::string(",") + diagram_event_name(k);
  return h;
}

std::string census_line(const CensusRow& row) {
  std::string out = row.generator + "," + std::to_string(row.m) + "," +
                    std::to_string(row.n);
  for (int64_t c : row.counts) out += "," + std::to_string(c);
  return out;
}

CensusRow census_row(const std::string& generator, int m, int n,
                     const Settings& cfg) {
  auto start = std::chrono::steady_clock::now();
  Scenario s = scenarios::generate(generator, m, n, cfg.seed);
  CensusRow row{generator, m, n, {}, 0};
  const auto& kinds = census_kinds();
  for (const LogEntry& e : run_log(s, s.t1, cfg)) {
    for (size_t i = 0; i < kinds.size(); ++i)
      if (e.kind == diagram_event_name(kinds[i])) ++row.counts[i];
  }
  row.seconds = seconds_since(start);
  return row;
}

std::string snapshot_svg(const Scenario& s, double t, const Settings& cfg) {
  if (!(t >= s.t0 && t <= s.t1))
    throw Error(ErrorKind::kInvalidArgument,
                "t=" + num(t) + " outside [" + num(s.t0) + ", " + num(s.t1) +
                    "]");
  Simulation sim(s, s.t1, cfg);
  Diagram d = sim.diagram_at(t);
  const Polygon& poly = s.polygon;
  double x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
  for (const Point& v : poly.vertices()) {
    x0 = std::min(x0, v.x), x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
  }
  const double pad = 0.02 * poly.diameter();
  const double sw = 0.003 * poly.diameter();
  // flip y so the picture matches the usual axes
  auto P = [&](const Point& p) { return num9(p.x) + "," + num9(0.0 - p.y); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num9(x0 - pad)
    << ' ' << num9(-y1 - pad) << ' ' << num9(x1 - x0 + 2 * pad) << ' '
    << num9(y1 - y0 + 2 * pad) << "\">\n";
  o << "<polygon points=\"";
  for (int i = 0; i < poly.size(); ++i) o << (i ? " " : "") << P(poly[i]);
  o << "\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"" << num9(sw)
    << "\"/>\n";
  for (size_t e = 0; e < d.edges().size(); ++e) {
    o << "<polyline points=\"";
    bool first = true;
    for (const Point& p : d.edge_polyline(static_cast<int>(e),
                                          sim.domain().eps_geom)) {
      o << (first ? "" : " ") << P(p);
      first = false;
    }
    o << "\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"" << num9(sw)
      << "\"/>\n";
  }
  auto dot = [&](const Point& p, const char* color, double r) {
    o << "<circle cx=\"" << num9(p.x) << "\" cy=\"" << num9(0.0 - p.y) << "\" r=\""
      << num9(r) << "\" fill=\"" << color << "\"/>\n";
  };
  // degree 1 on the boundary, degree 2 at map vertices, degree 3 at centers
  for (const DiagramEdge& e : d.edges()) {
    for (const EdgeEnd* end : {&e.a, &e.b})
      if (end->kind == EndKind::kBoundary) dot(end->x, "#2a9d3a", 2 * sw);
    const Bisector& b = d.bisector(e.p, e.q);
    for (int j : e.vertices) dot(b.vertices[j].x, "#e08a00", 2 * sw);
  }
  for (const DiagramCenter& c : d.centers()) dot(c.x, "#d62828", 2.5 * sw);
  std::vector<std::string> ids = s.ids();
  std::vector<Point> pos = sim.positions(t);
  for (size_t i = 0; i < pos.size(); ++i) {
    dot(pos[i], "black", 3 * sw);
    o << "<text x=\"" << num9(pos[i].x + 4 * sw) << "\" y=\""
      << num9(0.0 - pos[i].y) << "\" font-size=\"" << num9(12 * sw) << "\">"
      << ids[i] << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace kgvd::cli
