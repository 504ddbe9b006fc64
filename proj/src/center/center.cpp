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

#include "kgvd/center/center.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "kgvd/bisector/chain.hpp"
#include "kgvd/geom/error.hpp"

namespace kgvd {

std::optional<Point> compute_center(const ExtendedSpm& p, const ExtendedSpm& q,
                                    const ExtendedSpm& s) {
  const Bisector b = build_bisector(p, q);
  const double end = chain_end(b);
  const double scale = p.domain().polygon().diameter();
  auto g = [&](double u) {
    return s.distance(chain_point(b, u)) - chain_distance(b, p, u);
  };
  const double g0 = g(0), g1 = g(end);
  if (g0 == 0 || g1 == 0)
    throw Error(ErrorKind::kDegenerateCollinearCocircular,
                "three sites equidistant at a bisector endpoint");
  if ((g0 > 0) == (g1 > 0)) return std::nullopt;
  double lo = 0, hi = end;
  while (hi - lo > 1e-13 * std::max(1.0, end)) {
    double mid = 0.5 * (lo + hi);
    if ((g(mid) > 0) == (g0 > 0)) lo = mid;
    else hi = mid;
  }
  const double u = 0.5 * (lo + hi);
  if (std::fabs(g(u)) > 1e-7 * scale)
    throw Error(ErrorKind::kDegenerateCollinearCocircular,
                "distance gap jumps along the bisector");
  return chain_point(b, u);
}

namespace {

int apex_depth(const ExtendedSpm& spm, int apex) {
  return apex == kRootApex ? 0 : spm.depth(apex);
}

bool near_edge_interior(const Polygon& poly, const Point& x) {
  double bd = poly.boundary_distance(x);
  double vd = 1e300;
  for (const Point& v : poly.vertices()) vd = std::min(vd, dist(v, x));
  return bd < 1e-4 * poly.diameter() && vd > 10 * bd;
}

}  // namespace

std::vector<CenterEvent> classify_center_change(const Diagram& before,
                                                const Diagram& after,
                                                double time) {
  using nlohmann::json;
  std::vector<CenterEvent> out;
  const Polygon& poly = after.domain().polygon();
  const DiagramCenter* cb = before.centers().empty() ? nullptr : &before.centers()[0];
  const DiagramCenter* ca = after.centers().empty() ? nullptr : &after.centers()[0];
  if (!cb && !ca) return out;
  if (!cb || !ca) {
    const DiagramCenter* c = ca ? ca : cb;
    DiagramEventKind k =
        near_edge_interior(poly, c->x)
            ? (ca ? DiagramEventKind::kExpand13 : DiagramEventKind::kCollapse13)
            : DiagramEventKind::kVertex;
    out.push_back({time, k, {c->sites[0], c->sites[1], c->sites[2]},
                   json{{"center", {c->x.x, c->x.y}}, {"appears", ca != nullptr}}
                       .dump()});
    return out;
  }
  for (int j = 0; j < 3; ++j) {
    if (cb->apex[j] == ca->apex[j]) continue;
    const int site = ca->sites[j];
    const int d0 = apex_depth(before.spm(site), cb->apex[j]);
    const int d1 = apex_depth(after.spm(site), ca->apex[j]);
    DiagramEventKind k = DiagramEventKind::kVertex;
    if (d1 == d0 + 1) k = DiagramEventKind::kExpand23;
    if (d1 + 1 == d0) k = DiagramEventKind::kCollapse23;
    out.push_back({time, k, {site},
                   json{{"from_apex", cb->apex[j]}, {"to_apex", ca->apex[j]}}
                       .dump()});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CenterEvent& a, const CenterEvent& b) {
                     if (a.kind != b.kind) return a.kind < b.kind;
                     return a.sites < b.sites;
                   });
  return out;
}

VoronoiCenterTracker::VoronoiCenterTracker(DomainPtr dom,
                                           std::array<Trajectory, 3> sites,
                                           double t0, double horizon,
                                           DiagramKdsOptions opt)
    : kds_(dom, std::vector<Trajectory>(sites.begin(), sites.end()), t0,
           horizon, opt) {
  kds_.set_classifier(classify_center_change);
}

std::optional<Point> VoronoiCenterTracker::center() const {
  if (kds_.diagram().centers().empty()) return std::nullopt;
  return kds_.diagram().centers()[0].x;
}

std::optional<std::array<int, 3>> VoronoiCenterTracker::center_apexes() const {
  if (kds_.diagram().centers().empty()) return std::nullopt;
  return kds_.diagram().centers()[0].apex;
}

CenterTrace trace_center(VoronoiCenterTracker& tracker, double t1,
                         int max_events, int samples_per_piece) {
  CenterTrace out;
  auto sample_piece = [&](double a, double b) {
    std::vector<std::pair<double, Point>> piece;
    for (int k = 0; k < samples_per_piece; ++k) {
      double t = a + (b - a) * (k + 0.5) / samples_per_piece;
      Diagram d = tracker.build_at(t);
      if (!d.centers().empty()) piece.push_back({t, d.centers()[0].x});
    }
    out.pieces.push_back(std::move(piece));
  };
  double last = tracker.now();
  while (auto ev = tracker.next_event()) {
    if (ev->time > t1) break;
    if (static_cast<int>(out.events.size()) >= max_events)
      throw Error(ErrorKind::kEventBudgetExceeded,
                  "center trace exceeds " + std::to_string(max_events) +
                      " breakpoints by t=" + std::to_string(ev->time));
    if (ev->time > last) {
      sample_piece(last, ev->time);
      last = ev->time;
    }
    out.events.push_back(*ev);
    tracker.handle_event(*ev);
  }
  sample_piece(last, t1);
  return out;
}

}  // namespace kgvd
