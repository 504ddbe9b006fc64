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

#include "kgvd/spm/spm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kgvd/geom/error.hpp"

namespace kgvd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string SpmTopology::fingerprint() const {
  std::ostringstream os;
  for (size_t v = 0; v < parent.size(); ++v)
    os << parent[v] << (has_chord[v] ? ":" + std::to_string(hit_edge[v]) : "")
       << ",";
  return os.str();
}

double event_step(double horizon) {
  return 1e-7 * std::max(1.0, std::fabs(horizon));
}

ExtendedSpm ExtendedSpm::build(DomainPtr dom, const Point& site) {
  const Polygon& poly = dom->polygon();
  const double eps = dom->eps_geom;
  if (!poly.strictly_inside(site, eps)) {
    if (poly.contains(site, eps))
      throw Error(ErrorKind::kSiteOnBoundary, "site touches the boundary");
    throw Error(ErrorKind::kPointOutsidePolygon, "site outside polygon");
  }
  ExtendedSpm s;
  s.dom_ = dom;
  s.site_ = site;
  const int m = poly.size();
  SpmTopology& t = s.topo_;
  t.parent.assign(m, -1);
  t.root_child.assign(m, -1);
  t.tail.assign(m, 0);
  t.has_chord.assign(m, 0);
  t.hit_edge.assign(m, -1);
  for (int v = 0; v < m; ++v) {
    GeodesicPath path =
        shortest_path(dom->tri, PathEnd{site, -1}, PathEnd{poly[v], v}, eps);
    const auto& ids = path.vertex_ids;
    const size_t n = ids.size();
    t.parent[v] = n >= 3 ? ids[n - 2] : -1;
    t.root_child[v] = n >= 3 ? ids[1] : v;
    t.tail[v] = n >= 3 ? path.length - dist(site, poly[t.root_child[v]]) : 0;
    Point from = t.parent[v] < 0 ? site : poly[t.parent[v]];
    Vec d = poly[v] - from;
    if (poly.is_reflex(v) && poly.direction_enters(v, d)) {
      auto hit = poly.ray_cast(poly[v], d, v);
      if (hit) {
        t.has_chord[v] = 1;
        t.hit_edge[v] = hit->edge;
      }
    }
  }
  s.evaluate_geometry();
  s.build_faces();
  return s;
}

ExtendedSpm ExtendedSpm::with_site(const Point& site) const {
  ExtendedSpm s;
  s.dom_ = dom_;
  s.site_ = site;
  s.topo_ = topo_;
  s.time = time;
  s.evaluate_geometry();
  s.build_faces();
  return s;
}

void ExtendedSpm::evaluate_geometry() {
  const Polygon& poly = dom_->polygon();
  const int m = poly.size();
  dist_.assign(m, 0);
  chord_end_.assign(m, Point{});
  chord_lambda_.assign(m, 0);
  shadow_next_.assign(m, 0);
  for (int v = 0; v < m; ++v)
    dist_[v] = dist(site_, poly[topo_.root_child[v]]) + topo_.tail[v];
  for (int v = 0; v < m; ++v) {
    if (!topo_.has_chord[v]) continue;
    Point from = topo_.parent[v] < 0 ? site_ : poly[topo_.parent[v]];
    Vec d = poly[v] - from;
    int e = topo_.hit_edge[v];
    double s = 0, u = 0;
    if (!line_intersection(poly[v], poly[v] + d, poly[e], poly[poly.next(e)],
                           &s, &u))
      throw Error(ErrorKind::kDegeneracyDetected, "extension parallel to edge");
    chord_lambda_[v] = u;
    chord_end_[v] = poly.edge_point(e, u);
    shadow_next_[v] = cross(poly[poly.next(v)] - poly[v], d) > 0;
  }
}

void ExtendedSpm::build_faces() {
  const Polygon& poly = dom_->polygon();
  const int m = poly.size();
  items_.clear();
  std::vector<int> vertex_item(m), chord_item(m, -1);
  std::vector<std::vector<int>> on_edge(m);
  for (int v = 0; v < m; ++v)
    if (topo_.has_chord[v]) on_edge[topo_.hit_edge[v]].push_back(v);
  for (int e = 0; e < m; ++e) {
    vertex_item[e] = static_cast<int>(items_.size());
    items_.push_back({true, e, e, 0.0, poly[e]});
    auto& list = on_edge[e];
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return chord_lambda_[a] < chord_lambda_[b];
    });
    for (int v : list) {
      chord_item[v] = static_cast<int>(items_.size());
      items_.push_back({false, v, e, chord_lambda_[v], chord_end_[v]});
    }
  }
  const int n = static_cast<int>(items_.size());
  std::vector<int> partner(n, -1);
  for (int v = 0; v < m; ++v) {
    if (chord_item[v] < 0) continue;
    partner[vertex_item[v]] = chord_item[v];
    partner[chord_item[v]] = vertex_item[v];
  }
  std::vector<int> step_face(n, -1);
  faces_.clear();
  for (int k = 0; k < n; ++k) {
    if (step_face[k] >= 0) continue;
    SpmFace f;
    const int fid = static_cast<int>(faces_.size());
    int i = k;
    for (int guard = 0; guard <= 2 * n + 2; ++guard) {
      step_face[i] = fid;
      f.items.push_back(i);
      int j = (i + 1) % n;
      if (partner[j] >= 0) {
        f.items.push_back(j);
        i = partner[j];
      } else {
        i = j;
      }
      if (i == k) break;
      if (step_face[i] >= 0 && step_face[i] != fid)
        throw Error(ErrorKind::kDegeneracyDetected, "face tracing failed");
    }
    faces_.push_back(std::move(f));
  }
  for (auto& f : faces_) f.apex = -2;
  for (int v = 0; v < m; ++v) {
    if (!topo_.has_chord[v]) continue;
    int k = shadow_next_[v] ? vertex_item[v] : (vertex_item[v] + n - 1) % n;
    SpmFace& f = faces_[step_face[k]];
    if (f.apex != -2)
      throw Error(ErrorKind::kDegeneracyDetected, "face with two apexes");
    f.apex = v;
  }
  apex_face_.assign(m + 1, -1);
  int roots = 0;
  for (size_t i = 0; i < faces_.size(); ++i) {
    SpmFace& f = faces_[i];
    if (f.apex == -2) {
      f.apex = kRootApex;
      ++roots;
    }
    apex_face_[f.apex + 1] = static_cast<int>(i);
    f.ring.clear();
    for (int it : f.items) f.ring.push_back(items_[it].p);
  }
  if (roots != 1)
    throw Error(ErrorKind::kDegeneracyDetected, "expected one root face");
  cells_.clear();
  for (size_t i = 0; i < faces_.size(); ++i) {
    const SpmFace& f = faces_[i];
    Point a = apex_point(f.apex);
    const size_t k = f.items.size();
    for (size_t j = 0; j < k; ++j) {
      const BoundaryItem& b0 = items_[f.items[j]];
      const BoundaryItem& b1 = items_[f.items[(j + 1) % k]];
      if (f.apex >= 0 && ((b0.is_vertex && b0.vertex == f.apex) ||
                          (b1.is_vertex && b1.vertex == f.apex)))
        continue;
      if (orient(a, b0.p, b1.p) <= 0) continue;
      cells_.push_back({static_cast<int>(i), f.apex, a, b0.p, b1.p});
    }
  }
  pieces_.assign(m, {});
  for (int e = 0; e < m; ++e) {
    int first = vertex_item[e];
    int last = (e + 1 < m) ? vertex_item[e + 1] : n;
    for (int k = first; k < last; ++k) {
      EdgePiece pc;
      pc.lo = items_[k].lambda;
      pc.hi = (k + 1 < last) ? items_[k + 1].lambda : 1.0;
      pc.apex = faces_[step_face[k]].apex;
      pieces_[e].push_back(pc);
    }
  }
}

Point ExtendedSpm::apex_point(int apex) const {
  return apex < 0 ? site_ : dom_->polygon()[apex];
}

double ExtendedSpm::apex_distance(int apex) const {
  return apex < 0 ? 0.0 : dist_[apex];
}

int ExtendedSpm::depth(int v) const {
  int d = 0;
  for (int u = v; u >= 0; u = topo_.parent[u]) ++d;
  return d;
}

int ExtendedSpm::chord_count() const {
  return static_cast<int>(
      std::count(topo_.has_chord.begin(), topo_.has_chord.end(), 1));
}

std::optional<ExtensionSegment> ExtendedSpm::extension_segment(int v) const {
  if (v < 0 || v >= static_cast<int>(topo_.has_chord.size()) ||
      !topo_.has_chord[v])
    return std::nullopt;
  return ExtensionSegment{v, dom_->polygon()[v], chord_end_[v],
                          topo_.hit_edge[v]};
}

SpmLocation ExtendedSpm::locate(const Point& x) const {
  SpmLocation best;
  best.distance = kInf;
  const double tol = dom_->eps_geom;
  bool inside_any = false;
  for (size_t i = 0; i < faces_.size(); ++i) {
    const SpmFace& f = faces_[i];
    if (!ring_contains(f.ring, x)) continue;
    inside_any = true;
    double d = apex_distance(f.apex) + dist(x, apex_point(f.apex));
    if (d < best.distance) {
      best.distance = d;
      best.face = static_cast<int>(i);
      best.apex = f.apex;
    }
  }
  if (!inside_any) {
    // on a face boundary: accept faces within tolerance
    double slack = 1e3 * tol;
    for (size_t i = 0; i < faces_.size(); ++i) {
      const SpmFace& f = faces_[i];
      if (ring_signed_distance(f.ring, x) > slack) continue;
      double d = apex_distance(f.apex) + dist(x, apex_point(f.apex));
      if (d < best.distance) {
        best.distance = d;
        best.face = static_cast<int>(i);
        best.apex = f.apex;
      }
    }
    if (best.face < 0)
      throw Error(ErrorKind::kPointOutsidePolygon, "point outside polygon");
  }
  best.last_vertex = apex_point(best.apex);
  double best_w = -kInf;
  for (size_t c = 0; c < cells_.size(); ++c) {
    const SpmCell& cell = cells_[c];
    if (cell.face != best.face) continue;
    double w = std::min({orient(cell.a, cell.b, x), orient(cell.b, cell.c, x),
                         orient(cell.c, cell.a, x)});
    if (w > best_w) {
      best_w = w;
      best.cell = static_cast<int>(c);
    }
  }
  return best;
}

int ExtendedSpm::boundary_apex(int edge, double lambda) const {
  const auto& ps = pieces_[edge];
  for (const EdgePiece& pc : ps)
    if (lambda <= pc.hi) return pc.apex;
  return ps.back().apex;
}

double ExtendedSpm::boundary_distance(int edge, double lambda) const {
  Point x = dom_->polygon().edge_point(edge, lambda);
  int a = boundary_apex(edge, lambda);
  return apex_distance(a) + dist(x, apex_point(a));
}

double ExtendedSpm::cells_area() const {
  double a = 0;
  for (const SpmCell& c : cells_) a += 0.5 * orient(c.a, c.b, c.c);
  return a;
}

const char* spm_event_name(SpmEventKind k) {
  switch (k) {
    case SpmEventKind::kVertexBecomesVisible: return "VertexBecomesVisible";
    case SpmEventKind::kVertexBecomesHidden: return "VertexBecomesHidden";
    case SpmEventKind::kExtensionEndpointCrossesVertex:
      return "ExtensionEndpointCrossesVertex";
  }
  return "?";
}

ExtendedSpm build_spm(DomainPtr dom, const Point& site) {
  return ExtendedSpm::build(std::move(dom), site);
}

namespace {

// Times in (now, inf) at which the moving point crosses segment ab.
void crossing_times(const Point& a, const Point& b, const Trajectory& traj,
                    double now, std::vector<double>* out) {
  Vec ab = b - a;
  Point s0 = traj.at(now);
  double c0 = cross(ab, s0 - a);
  double c1 = cross(ab, traj.vel);
  if (c1 == 0) return;
  double dt = -c0 / c1;
  if (!(dt > 0)) return;
  double t = now + dt;
  Point x = traj.at(t);
  double l = dot(x - a, ab) / norm2(ab);
  if (l < -1e-12 || l > 1 + 1e-12) return;
  out->push_back(t);
}

}  // namespace

double boundary_exit_time(const Polygon& poly, const Trajectory& traj,
                          double now) {
  std::vector<double> ts;
  for (int e = 0; e < poly.size(); ++e)
    crossing_times(poly[e], poly[poly.next(e)], traj, now, &ts);
  double best = kInf;
  for (double t : ts) best = std::min(best, t);
  return best;
}

std::optional<SpmEvent> next_spm_event(const ExtendedSpm& spm,
                                       const Trajectory& traj, double now,
                                       double horizon) {
  if (traj.is_static()) return std::nullopt;
  const Domain& dom = spm.domain();
  std::vector<double> ts;
  for (const CriticalSegment& c : dom.critical)
    crossing_times(c.a, c.b, traj, now, &ts);
  std::sort(ts.begin(), ts.end());
  const double exit = boundary_exit_time(dom.polygon(), traj, now);
  const double step = event_step(horizon);
  for (double t : ts) {
    if (t > horizon || t >= exit) break;
    if (t <= now + 0.5 * step) continue;
    ExtendedSpm before = ExtendedSpm::build(spm.domain_ptr(), traj.at(t - 0.5 * step));
    ExtendedSpm after = ExtendedSpm::build(spm.domain_ptr(), traj.at(t + 0.5 * step));
    const SpmTopology& b = before.topology();
    const SpmTopology& a = after.topology();
    if (b.same_as(a)) continue;
    SpmEvent ev;
    ev.time = t;
    ev.step = step;
    ev.kind = SpmEventKind::kExtensionEndpointCrossesVertex;
    for (size_t v = 0; v < a.parent.size(); ++v) {
      if (a.parent[v] == b.parent[v]) continue;
      ev.vertex = static_cast<int>(v);
      ev.kind = a.parent[v] < 0 ? SpmEventKind::kVertexBecomesVisible
                                : SpmEventKind::kVertexBecomesHidden;
      break;
    }
    if (ev.vertex < 0) {
      for (size_t v = 0; v < a.parent.size(); ++v)
        if (a.has_chord[v] != b.has_chord[v] || a.hit_edge[v] != b.hit_edge[v]) {
          ev.vertex = static_cast<int>(v);
          break;
        }
    }
    return ev;
  }
  if (exit <= horizon)
    throw Error(ErrorKind::kSiteExitsPolygon,
                "site reaches the boundary at t=" + std::to_string(exit));
  return std::nullopt;
}

ExtendedSpm advance_spm(const ExtendedSpm& spm, const SpmEvent& ev,
                        const Trajectory& traj) {
  if (spm.time > ev.time)
    throw Error(ErrorKind::kStaleEvent, "map already past the event");
  double t = ev.time + (ev.step > 0 ? ev.step : event_step(ev.time));
  ExtendedSpm out = ExtendedSpm::build(spm.domain_ptr(), traj.at(t));
  out.time = t;
  return out;
}

}  // namespace kgvd
