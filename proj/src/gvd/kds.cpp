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

#include "kgvd/gvd/kds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include <json.hpp>

#include "kgvd/bisector/chain.hpp"
#include "kgvd/bisector/kds.hpp"
#include "kgvd/geom/error.hpp"
#include "kgvd/gvd/event_queue.hpp"
#include "kgvd/spm/frozen_map.hpp"

namespace kgvd {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Zero of f on [0, 1] by bisection; the closer end when f keeps its sign.
double solve_unit(const std::function<double(double)>& f) {
  double f0 = f(0), f1 = f(1);
  if (!std::isfinite(f0) || !std::isfinite(f1)) return kNan;
  if ((f0 < 0) == (f1 < 0)) return std::fabs(f0) < std::fabs(f1) ? 0 : 1;
  double lo = 0, hi = 1;
  const bool neg = f0 < 0;
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0) == neg) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct NodeAt {
  Point x;
  double dp = kNan;  // distance to the first site
};

// Node k of a bisector with frozen topology at time t.
NodeAt node_at(const FrozenMap& P, const FrozenMap& Q, const Bisector& b,
               int k, double t) {
  const Polygon& poly = P.spm().domain().polygon();
  const int last = b.node_count() - 1;
  NodeAt out;
  if (k == 0 || k == last) {
    const int e = k == 0 ? b.start.edge : b.end.edge;
    double lam = solve_unit([&](double l) {
      return P.boundary_distance(e, l, t) - Q.boundary_distance(e, l, t);
    });
    if (!std::isfinite(lam)) return out;
    out.x = poly.edge_point(e, lam);
    out.dp = P.boundary_distance(e, lam, t);
    return out;
  }
  const BisectorVertex& v = b.vertices[k - 1];
  const FrozenMap& own = v.owner == 0 ? P : Q;
  const FrozenMap& other = v.owner == 0 ? Q : P;
  const int apex_other =
      v.owner == 0 ? b.arcs[k - 1].apex_q : b.arcs[k - 1].apex_p;
  const Point pv = poly[v.vertex];
  const Point ce = own.chord_end(v.vertex, t);
  if (!ce.finite()) return out;
  const double dv = own.vertex_distance(v.vertex, t);
  double lam = solve_unit([&](double l) {
    Point x = lerp(pv, ce, l);
    return dv + dist(x, pv) - other.distance_via(apex_other, x, t);
  });
  if (!std::isfinite(lam)) return out;
  out.x = lerp(pv, ce, lam);
  out.dp = v.owner == 0 ? dv + dist(out.x, pv)
                        : other.distance_via(apex_other, out.x, t);
  return out;
}

// Point on the frozen arc of p and q where the third site is as far as p,
// nearest to a reference point.
std::optional<Point> center_at(const FrozenMap& P, const FrozenMap& Q,
                               const FrozenMap& S, int ap, int aq, int as,
                               const Point& ref, double t, double scale) {
  HyperbolicArc h(P.apex_point(ap, t), P.apex_distance(ap, t),
                  Q.apex_point(aq, t), Q.apex_distance(aq, t));
  if (h.empty_locus()) return std::nullopt;
  auto f = [&](double w) {
    Point x = h.point(w);
    return S.distance_via(as, x, t) - P.distance_via(ap, x, t);
  };
  const double w0 = h.param_of(ref);
  const double f0 = f(w0);
  if (f0 == 0) return h.point(w0);
  double step = 1e-9 * scale;
  for (int i = 0; i < 64; ++i, step *= 2) {
    std::optional<double> best;
    for (double sgn : {-1.0, 1.0}) {
      double lo = w0 + sgn * step / 2, hi = w0 + sgn * step;
      double flo = i == 0 ? f0 : f(lo), fhi = f(hi);
      if (!std::isfinite(fhi)) continue;
      if ((flo < 0) == (fhi < 0)) continue;
      const bool neg = flo < 0;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((f(mid) < 0) == neg) lo = mid;
        else hi = mid;
      }
      double w = 0.5 * (lo + hi);
      if (!best || std::fabs(w - w0) < std::fabs(*best - w0)) best = w;
    }
    if (best) return h.point(*best);
  }
  return std::nullopt;
}

double true_distance(const Domain& dom, const Point& a, const Point& b) {
  try {
    return geodesic_distance(dom.tri, a, b, 1e-7 * dom.polygon().diameter());
  } catch (const Error&) {
    return kNan;
  }
}

std::string tri_key(const std::array<int, 3>& s) {
  return std::to_string(s[0]) + "." + std::to_string(s[1]) + "." +
         std::to_string(s[2]);
}

}  // namespace

const char* diagram_event_name(DiagramEventKind k) {
  switch (k) {
    case DiagramEventKind::kVertex: return "Vertex";
    case DiagramEventKind::kCollapse12: return "Collapse12";
    case DiagramEventKind::kCollapse13: return "Collapse13";
    case DiagramEventKind::kCollapse22: return "Collapse22";
    case DiagramEventKind::kCollapse23: return "Collapse23";
    case DiagramEventKind::kCollapse33: return "Collapse33";
    case DiagramEventKind::kExpand12: return "Expand12";
    case DiagramEventKind::kExpand13: return "Expand13";
    case DiagramEventKind::kExpand22: return "Expand22";
    case DiagramEventKind::kExpand23: return "Expand23";
    case DiagramEventKind::kExpand33: return "Expand33";
  }
  return "?";
}

const std::vector<DiagramEventKind>& census_kinds() {
  static const std::vector<DiagramEventKind> kinds = {
      DiagramEventKind::kCollapse12, DiagramEventKind::kExpand12,
      DiagramEventKind::kCollapse13, DiagramEventKind::kExpand13,
      DiagramEventKind::kCollapse22, DiagramEventKind::kExpand22,
      DiagramEventKind::kCollapse23, DiagramEventKind::kExpand23,
      DiagramEventKind::kCollapse33, DiagramEventKind::kExpand33,
      DiagramEventKind::kVertex};
  return kinds;
}

namespace {

struct EdgeTags {
  std::string a, b;        // end tags
  EdgeEnd end_a, end_b;
  std::vector<std::pair<int, int>> inner;  // (site, vertex)
};

std::map<std::pair<int, int>, EdgeTags> edge_tags(const Diagram& d) {
  std::map<std::pair<int, int>, EdgeTags> out;
  for (const DiagramEdge& e : d.edges()) {
    const Bisector& b = d.bisector(e.p, e.q);
    EdgeTags t;
    auto tag = [](const EdgeEnd& x) {
      return x.kind == EndKind::kBoundary ? "e" + std::to_string(x.edge)
                                          : "c" + std::to_string(x.third);
    };
    t.a = tag(e.a);
    t.b = tag(e.b);
    t.end_a = e.a;
    t.end_b = e.b;
    for (int j : e.vertices) {
      const BisectorVertex& v = b.vertices[j];
      t.inner.push_back({v.owner == 0 ? e.p : e.q, v.vertex});
    }
    out[{e.p, e.q}] = t;
  }
  return out;
}

std::map<std::array<int, 3>, Point> center_map(const Diagram& d) {
  std::map<std::array<int, 3>, Point> out;
  for (const DiagramCenter& c : d.centers()) out[c.sites] = c.x;
  return out;
}

int shared_vertex(int e0, int e1, int m) {
  if ((e0 + 1) % m == e1) return e1;
  if ((e1 + 1) % m == e0) return e0;
  return -1;
}

}  // namespace

std::vector<DiagramEvent> classify_diagram_change(const Diagram& before,
                                                  const Diagram& after,
                                                  double time) {
  std::vector<DiagramEvent> out;
  if (before.fingerprint() == after.fingerprint()) return out;
  using nlohmann::json;
  const Polygon& poly = after.domain().polygon();
  const double scale = poly.diameter();
  auto emit = [&](DiagramEventKind k, std::vector<int> sites, json detail) {
    std::sort(sites.begin(), sites.end());
    out.push_back({time, k, sites, detail.dump()});
  };

  auto cb = center_map(before), ca = center_map(after);
  std::vector<std::array<int, 3>> lost, gained;
  for (const auto& [k, x] : cb)
    if (!ca.count(k)) lost.push_back(k);
  for (const auto& [k, x] : ca)
    if (!cb.count(k)) gained.push_back(k);
  auto tb = edge_tags(before), ta = edge_tags(after);
  const bool center_change = !lost.empty() || !gained.empty();

  // A center appearing or vanishing at the boundary away from polygon
  // vertices meets a bisector endpoint; elsewhere it is a vertex event.
  auto at_boundary = [&](const Point& x) {
    double bd = poly.boundary_distance(x);
    double vd = 1e300;
    for (const Point& v : poly.vertices()) vd = std::min(vd, dist(v, x));
    return bd < 1e-4 * scale && vd > 10 * bd;
  };
  if (!lost.empty() && lost.size() == gained.size()) {
    for (const auto& [k, t] : tb)
      if (!ta.count(k))
        emit(DiagramEventKind::kCollapse33, {k.first, k.second},
             {{"pair", {k.first, k.second}}});
    for (const auto& [k, t] : ta)
      if (!tb.count(k))
        emit(DiagramEventKind::kExpand33, {k.first, k.second},
             {{"pair", {k.first, k.second}}});
  } else {
    for (const auto& c : lost) {
      const Point& x = cb[c];
      emit(at_boundary(x) ? DiagramEventKind::kCollapse13
                          : DiagramEventKind::kVertex,
           {c[0], c[1], c[2]}, {{"center", {x.x, x.y}}});
    }
    for (const auto& c : gained) {
      const Point& x = ca[c];
      emit(at_boundary(x) ? DiagramEventKind::kExpand13
                          : DiagramEventKind::kVertex,
           {c[0], c[1], c[2]}, {{"center", {x.x, x.y}}});
    }
  }

  for (const auto& [k, t0] : tb) {
    auto it = ta.find(k);
    if (it == ta.end()) {
      if (!center_change)
        emit(DiagramEventKind::kVertex, {k.first, k.second},
             {{"pair", {k.first, k.second}}, {"edge", "vanished"}});
      continue;
    }
    const EdgeTags& t1 = it->second;
    std::vector<int> sites = {k.first, k.second};
    for (int side = 0; side < 2; ++side) {
      const EdgeEnd& e0 = side == 0 ? t0.end_a : t0.end_b;
      const EdgeEnd& e1 = side == 0 ? t1.end_a : t1.end_b;
      if (e0.kind == EndKind::kBoundary && e1.kind == EndKind::kBoundary &&
          e0.edge != e1.edge)
        emit(DiagramEventKind::kVertex, sites,
             {{"vertex", shared_vertex(e0.edge, e1.edge, poly.size())},
              {"from_edge", e0.edge},
              {"to_edge", e1.edge}});
    }
    const auto& vb = t0.inner;
    const auto& va = t1.inner;
    size_t pre = 0;
    while (pre < vb.size() && pre < va.size() && vb[pre] == va[pre]) ++pre;
    size_t suf = 0;
    while (suf + pre < vb.size() && suf + pre < va.size() &&
           vb[vb.size() - 1 - suf] == va[va.size() - 1 - suf])
      ++suf;
    std::vector<std::pair<int, int>> rb(vb.begin() + pre, vb.end() - suf);
    std::vector<std::pair<int, int>> ra(va.begin() + pre, va.end() - suf);
    if (rb.empty() && ra.empty()) continue;
    auto vertex_detail = [](const std::pair<int, int>& v) {
      return json{{"owner", v.first}, {"vertex", v.second}};
    };
    // kind by the end next to which a vertex appears or vanishes
    auto end_kind = [&](bool at_start, const EdgeTags& t, bool collapse) {
      const EdgeEnd& e = at_start ? t.end_a : t.end_b;
      if (e.kind == EndKind::kBoundary)
        return collapse ? DiagramEventKind::kCollapse12
                        : DiagramEventKind::kExpand12;
      return collapse ? DiagramEventKind::kCollapse23
                      : DiagramEventKind::kExpand23;
    };
    if (rb.empty() && ra.size() == 1 && (pre == 0 || suf == 0)) {
      emit(end_kind(pre == 0, t1, false), sites, vertex_detail(ra[0]));
    } else if (ra.empty() && rb.size() == 1 && (pre == 0 || suf == 0)) {
      emit(end_kind(pre == 0, t0, true), sites, vertex_detail(rb[0]));
    } else if (rb.size() == 2 && ra.size() == 2 && rb[0] == ra[1] &&
               rb[1] == ra[0]) {
      json d = {{"first", vertex_detail(rb[0])}, {"second", vertex_detail(rb[1])}};
      emit(DiagramEventKind::kCollapse22, sites, d);
      emit(DiagramEventKind::kExpand22, sites, d);
    } else if (rb.size() == 1 && ra.size() == 1 && pre == 0 && suf == 0 &&
               vb.size() == 1 && va.size() == 1) {
      // one vertex left at an end while another entered at the other
      emit(end_kind(true, t0, true), sites, vertex_detail(rb[0]));
      emit(end_kind(false, t1, false), sites, vertex_detail(ra[0]));
    } else {
      emit(DiagramEventKind::kVertex, sites, {{"edge", "restructured"}});
    }
  }
  for (const auto& [k, t] : ta)
    if (!tb.count(k) && !center_change)
      emit(DiagramEventKind::kVertex, {k.first, k.second},
           {{"pair", {k.first, k.second}}, {"edge", "appeared"}});
  if (out.empty())
    emit(DiagramEventKind::kVertex, {}, {{"edge", "unclassified"}});
  std::stable_sort(out.begin(), out.end(),
                   [](const DiagramEvent& a, const DiagramEvent& b) {
                     if (a.kind != b.kind) return a.kind < b.kind;
                     return a.sites < b.sites;
                   });
  return out;
}

DiagramKds::DiagramKds(DomainPtr dom, std::vector<Trajectory> sites,
                       double t0, double horizon, DiagramKdsOptions opt)
    : dom_(dom),
      traj_(std::move(sites)),
      epoch_(traj_.size(), 0),
      now_(t0),
      horizon_(horizon),
      opt_(opt),
      classify_(classify_diagram_change),
      cache_(march_options(horizon - t0)),
      spm_cap_(traj_.size()) {
  diagram_ = build_at(t0);
  sync_forest();
}

Diagram DiagramKds::build_at(double t) const {
  std::vector<SpmPtr> spms;
  for (const Trajectory& tr : traj_) {
    auto s = std::make_shared<ExtendedSpm>(build_spm(dom_, tr.at(t)));
    s->time = t;
    spms.push_back(s);
  }
  try {
    return Diagram::build(dom_, spms);
  } catch (const Error& e) {
    ErrorKind k = e.kind() == ErrorKind::kDegenerateCocircularSites
                      ? e.kind()
                      : ErrorKind::kDegeneracyDetected;
    throw Error(k, std::string(e.what()) + " at t=" + std::to_string(t));
  }
}

void DiagramKds::commit(Diagram d) {
  for (int i = 0; i < n(); ++i)
    if (!d.spm(i).topology().same_as(diagram_.spm(i).topology())) ++epoch_[i];
  now_ = std::max(now_, d.spm(0).time);
  diagram_ = std::move(d);
  sync_forest();
  fresh_ = false;
}

void DiagramKds::sync_forest() {
  const Polygon& poly = dom_->polygon();
  const int m = poly.size();
  if (forest_.size() == 0) {
    forest_ = DynamicSpmForest(m + n());
    forest_owner_.assign(m, -1);
    for (int v = 0; v < m; ++v) forest_.set_position(v, poly[v]);
  }
  for (int i = 0; i < n(); ++i) forest_.set_position(m + i, diagram_.spm(i).site());
  std::vector<int> want(m);
  for (int v = 0; v < m; ++v) {
    int o = 0;
    for (int i = 1; i < n(); ++i)
      if (diagram_.spm(i).vertex_distance(v) < diagram_.spm(o).vertex_distance(v))
        o = i;
    int par = diagram_.spm(o).topology().parent[v];
    want[v] = par < 0 ? m + o : par;
    forest_owner_[v] = o;
  }
  std::vector<int> changed;
  for (int v = 0; v < m; ++v)
    if (forest_.parent(v) != want[v]) changed.push_back(v);
  for (int v : changed)
    if (forest_.parent(v) >= 0) {
      forest_.cut(v);
      ++stats_.forest_cuts;
    }
  for (int v : changed) {
    forest_.link(want[v], v, dist(forest_.position(v), forest_.position(want[v])));
    ++stats_.forest_links;
  }
  // edges to moving sites change length
  for (int v = 0; v < m; ++v)
    if (want[v] >= m)
      forest_.set_length(v, dist(poly[v], forest_.position(want[v])));
}

bool DiagramKds::forest_consistent(double tol) {
  const int m = dom_->polygon().size();
  for (int v = 0; v < m; ++v) {
    double want = diagram_.spm(forest_owner_[v]).vertex_distance(v);
    if (std::fabs(forest_.path_length(v) - want) > tol) return false;
    if (forest_.root(v) != m + forest_owner_[v]) return false;
  }
  return true;
}

void DiagramKds::refresh() {
  if (fresh_) return;
  const Polygon& poly = dom_->polygon();
  const double scale = poly.diameter();
  double cap = horizon_;
  bool cap_is_event = false;
  next_is_exit_ = false;
  for (int i = 0; i < n(); ++i) {
    SpmCap& c = spm_cap_[i];
    if (c.epoch != epoch_[i] || (c.time && *c.time <= now_)) {
      c.epoch = epoch_[i];
      c.exit = false;
      c.time.reset();
      try {
        auto ev = next_spm_event(diagram_.spm(i), traj_[i], now_, horizon_);
        if (ev) c.time = ev->time;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kSiteExitsPolygon) throw;
        c.time = boundary_exit_time(poly, traj_[i], now_);
        c.exit = true;
      }
    }
    if (c.time && *c.time < cap) {
      cap = *c.time;
      cap_is_event = true;
      next_is_exit_ = c.exit;
    }
  }

  std::vector<FrozenMap> F;
  for (int i = 0; i < n(); ++i) F.emplace_back(diagram_.spm_ptr(i), traj_[i]);
  const Domain& dom = *dom_;
  std::vector<Guard> guards;
  auto ep = [&](int i) { return std::to_string(epoch_[i]); };
  for (const DiagramEdge& e : diagram_.edges()) {
    const int p = e.p, q = e.q;
    const Bisector& b = diagram_.bisector(p, q);
    const std::string ctx =
        "|" + std::to_string(p) + "," + std::to_string(q) + "|" + ep(p) + "," + ep(q);
    append_bisector_guards(F[p], F[q], b, ctx, false, &guards);
    const std::string shape = b.fingerprint_string();
    const int last = b.node_count() - 1;
    for (int k = 0; k <= last; ++k) {
      std::vector<int> rs;
      if (k >= e.a.s && k <= e.b.s) {
        for (int r = 0; r < n(); ++r)
          if (r != p && r != q) rs.push_back(r);
      } else if (k < e.a.s && e.a.kind == EndKind::kCenter) {
        rs.push_back(e.a.third);
      } else if (k > e.b.s && e.b.kind == EndKind::kCenter) {
        rs.push_back(e.b.third);
      }
      for (int r : rs) {
        Guard g;
        g.key = "H" + std::to_string(k) + "." + std::to_string(r) + "[" +
                shape + "]" + ctx + "," + ep(r);
        g.kind = GuardKind::kEmptiness;
        g.a = r;
        g.b = k;
        g.f = [&F, &b, &dom, p, q, k, r](double t) {
          NodeAt na = node_at(F[p], F[q], b, k, t);
          if (!std::isfinite(na.dp)) return kNan;
          return true_distance(dom, F[r].site(t), na.x) - na.dp;
        };
        guards.push_back(std::move(g));
      }
    }
  }
  for (int ci = 0; ci < static_cast<int>(diagram_.centers().size()); ++ci) {
    const DiagramCenter& c = diagram_.centers()[ci];
    const int p = c.sites[0], q = c.sites[1], s = c.sites[2];
    const DiagramEdge* edge = nullptr;
    double at = 0;
    for (const DiagramEdge& e : diagram_.edges()) {
      if (e.p != p || e.q != q) continue;
      if (e.a.kind == EndKind::kCenter && e.a.center == ci) edge = &e, at = e.a.s;
      if (e.b.kind == EndKind::kCenter && e.b.center == ci) edge = &e, at = e.b.s;
    }
    if (!edge) continue;
    const Bisector& b = diagram_.bisector(p, q);
    const int j = chain_arc(b, at);
    const int ap = b.arcs[j].apex_p, aq = b.arcs[j].apex_q, as = c.apex[2];
    const Point ref = c.x;
    for (int r = 0; r < n(); ++r) {
      if (r == p || r == q || r == s) continue;
      Guard g;
      g.key = "C" + tri_key(c.sites) + "." + std::to_string(r) + ":" +
              std::to_string(ap) + "," + std::to_string(aq) + "," +
              std::to_string(as) + "|" + ep(p) + "," + ep(q) + "," + ep(s) +
              "," + ep(r);
      g.kind = GuardKind::kCenterFace;
      g.a = r;
      g.b = ci;
      g.f = [&F, &dom, p, q, s, r, ap, aq, as, ref, scale](double t) {
        auto x = center_at(F[p], F[q], F[s], ap, aq, as, ref, t, scale);
        if (!x) return kNan;
        return true_distance(dom, F[r].site(t), *x) - F[p].distance_via(ap, *x, t);
      };
      guards.push_back(std::move(g));
    }
  }

  EventQueue queue;
  std::vector<std::string> keys;
  for (const Guard& g : guards) {
    keys.push_back(g.key);
    double limit = queue.empty() ? cap : std::min(cap, queue.top().time);
    auto f = cache_.failure(g, now_, limit);
    if (f) queue.push({*f, g.a, g.b, g.key});
  }
  cache_.retain(keys);
  stats_.guards_computed = cache_.computed();
  stats_.guards_reused = cache_.reused();
  if (!queue.empty() && (!cap_is_event || queue.top().time < cap)) {
    next_time_ = queue.top().time;
    next_is_exit_ = false;
  } else if (cap_is_event) {
    next_time_ = cap;
  } else {
    next_time_.reset();
  }
  fresh_ = true;
}

std::optional<DiagramEvent> DiagramKds::next_event() {
  if (!pending_.empty()) return pending_.front();
  const double step = event_step(horizon_);
  while (true) {
    refresh();
    if (!next_time_) return std::nullopt;
    const double t = *next_time_;
    if (next_is_exit_)
      throw Error(ErrorKind::kSiteExitsPolygon,
                  "site reaches the boundary at t=" + std::to_string(t));
    Diagram after = build_at(t + step);
    ++stats_.rebuilds;
    std::vector<DiagramEvent> evs;
    if (after.fingerprint() != diagram_.fingerprint() ||
        classify_ != nullptr) {
      if (t - step > now_) {
        evs = classify_(build_at(t - step), after, t);
      } else {
        evs = classify_(diagram_, after, t);
      }
    }
    if (evs.empty()) {
      ++stats_.internal_events;
      commit(std::move(after));
      continue;
    }
    if (reported_ + static_cast<int64_t>(evs.size()) > opt_.event_budget)
      throw Error(ErrorKind::kEventBudgetExceeded,
                  "more than " + std::to_string(opt_.event_budget) +
                      " events by t=" + std::to_string(t));
    reported_ += static_cast<int64_t>(evs.size());
    staged_ = std::move(after);
    pending_.assign(evs.begin(), evs.end());
    return pending_.front();
  }
}

void DiagramKds::handle_event(const DiagramEvent& ev) {
  if (pending_.empty() || pending_.front().time != ev.time ||
      pending_.front().kind != ev.kind || pending_.front().sites != ev.sites)
    throw Error(ErrorKind::kStaleEvent,
                "event at t=" + std::to_string(ev.time) + " is not pending");
  if (staged_) {
    commit(std::move(*staged_));
    staged_.reset();
  }
  pending_.pop_front();
}

std::vector<DiagramEvent> DiagramKds::run() {
  std::vector<DiagramEvent> log;
  while (auto ev = next_event()) {
    log.push_back(*ev);
    handle_event(*ev);
  }
  return log;
}

}  // namespace kgvd
