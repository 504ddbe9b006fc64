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

#include "kgvd/bisector/kds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kgvd/geom/error.hpp"

namespace kgvd {

namespace {

using Tag = std::pair<int, int>;

std::vector<Tag> tags(const Bisector& b) {
  std::vector<Tag> out;
  for (const BisectorVertex& v : b.vertices) out.push_back({v.owner, v.vertex});
  return out;
}

std::string tag_text(const Tag& t) {
  return (t.first == 0 ? "p" : "q") + std::to_string(t.second);
}

// Vertex shared by two boundary edges, -1 when they are not adjacent.
int shared_vertex(int e0, int e1, int m) {
  if (e0 == e1 || m <= 0) return -1;
  if ((e0 + 1) % m == e1) return e1;
  if ((e1 + 1) % m == e0) return e0;
  return -1;
}

bool nonvisible_run(const std::vector<PieceKind>& kinds, int i) {
  return kinds[i] == PieceKind::kNonVisible &&
         kinds[i + 1] == PieceKind::kNonVisible &&
         kinds[i + 2] == PieceKind::kNonVisible;
}

}  // namespace

const char* kds_mode_name(KdsMode m) {
  return m == KdsMode::kNaive ? "naive" : "responsive";
}

const char* bisector_event_name(BisectorEventKind k) {
  switch (k) {
    case BisectorEventKind::kVertex: return "Vertex";
    case BisectorEventKind::kCollapse12: return "Collapse12";
    case BisectorEventKind::kExpand12: return "Expand12";
    case BisectorEventKind::kCollapse22: return "Collapse22";
    case BisectorEventKind::kExpand22: return "Expand22";
  }
  return "?";
}

std::vector<BisectorEvent> classify_bisector_change(const Bisector& before,
                                                    const Bisector& after,
                                                    double time, int m) {
  std::vector<BisectorEvent> out;
  auto ev = [&](BisectorEventKind k, int vertex, int owner, std::string d) {
    BisectorEvent e;
    e.time = time;
    e.kind = k;
    e.vertex = vertex;
    e.owner = owner;
    e.detail = std::move(d);
    out.push_back(e);
  };
  const bool start_moved = before.start.edge != after.start.edge;
  const bool end_moved = before.end.edge != after.end.edge;
  bool vertex_logged = false;
  if (start_moved || end_moved) {
    int v = -1;
    std::string d;
    if (start_moved) {
      d = "start e" + std::to_string(before.start.edge) + "->e" +
          std::to_string(after.start.edge);
      v = shared_vertex(before.start.edge, after.start.edge, m);
    }
    if (end_moved) {
      if (!d.empty()) d += " ";
      d += "end e" + std::to_string(before.end.edge) + "->e" +
           std::to_string(after.end.edge);
      if (v < 0) v = shared_vertex(before.end.edge, after.end.edge, m);
    }
    ev(BisectorEventKind::kVertex, v, -1, d);
    vertex_logged = true;
  }
  std::vector<Tag> a = tags(before), b = tags(after);
  size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  size_t j = 0;
  while (j < a.size() - i && j < b.size() - i &&
         a[a.size() - 1 - j] == b[b.size() - 1 - j])
    ++j;
  std::vector<Tag> ma(a.begin() + i, a.end() - j), mb(b.begin() + i, b.end() - j);
  const bool at_end = i == 0 || j == 0;
  if (ma.empty() && mb.empty()) return out;
  if (ma.empty() && mb.size() == 1 && at_end) {
    ev(BisectorEventKind::kExpand12, mb[0].second, mb[0].first,
       "+" + tag_text(mb[0]));
  } else if (mb.empty() && ma.size() == 1 && at_end) {
    ev(BisectorEventKind::kCollapse12, ma[0].second, ma[0].first,
       "-" + tag_text(ma[0]));
  } else if (ma.size() == 2 && mb.size() == 2 && ma[0] == mb[1] &&
             ma[1] == mb[0]) {
    std::string d = tag_text(ma[0]) + "/" + tag_text(ma[1]);
    ev(BisectorEventKind::kCollapse22, ma[0].second, ma[0].first, d);
    ev(BisectorEventKind::kExpand22, ma[1].second, ma[1].first, d);
  } else if (!vertex_logged) {
    int v = -1;
    for (const auto* l : {&ma, &mb})
      for (const Tag& t : *l) v = (v < 0 || v == t.second) ? t.second : -2;
    std::string d;
    for (const Tag& t : ma) d += "-" + tag_text(t) + " ";
    for (const Tag& t : mb) d += "+" + tag_text(t) + " ";
    if (!d.empty()) d.pop_back();
    ev(BisectorEventKind::kVertex, v < 0 ? -1 : v, -1, d);
  }
  return out;
}

std::vector<NonVisiblePair> nonvisible_pairs(const Bisector& b,
                                             const ExtendedSpm& p,
                                             const ExtendedSpm& q) {
  std::vector<NonVisiblePair> out;
  const Polygon& poly = p.domain().polygon();
  std::vector<PieceKind> kinds = arc_kinds(b);
  for (int i = 0; i + 1 < static_cast<int>(b.vertices.size()); ++i) {
    const BisectorVertex &x = b.vertices[i], &y = b.vertices[i + 1];
    if (x.owner == y.owner || !nonvisible_run(kinds, i)) continue;
    int v = x.owner == 0 ? x.vertex : y.vertex;
    int w = x.owner == 0 ? y.vertex : x.vertex;
    if (p.topology().parent[v] < 0 || q.topology().parent[w] < 0) continue;
    double s, u;
    Point ev = p.chord_end(v), ew = q.chord_end(w);
    if (!line_intersection(poly[v], ev, poly[w], ew, &s, &u)) continue;
    if (s < 0 || s > 1 || u < 0 || u > 1) continue;
    Point ep = lerp(poly[v], ev, s);
    NonVisiblePair np;
    np.root_p = p.topology().root_child[v];
    np.root_q = q.topology().root_child[w];
    np.vertex_p = v;
    np.vertex_q = w;
    np.value = dist(ep, poly[v]) - dist(ep, poly[w]);
    np.anchor = p.topology().tail[v] - q.topology().tail[w];
    double z = dist(p.site(), poly[np.root_p]) - dist(q.site(), poly[np.root_q]);
    np.p_side = np.value + np.anchor + z < 0;
    np.key = 0.5 * (x.order_key + y.order_key);
    out.push_back(np);
  }
  return out;
}

void append_bisector_guards(const FrozenMap& p, const FrozenMap& q,
                            const Bisector& b, const std::string& ctx,
                            bool skip_nonvisible, std::vector<Guard>* out) {
  const Polygon& poly = p.spm().domain().polygon();
  const int m = poly.size();
  const double speed = p.speed() + q.speed();
  const FrozenMap* maps[2] = {&p, &q};
  // polygon vertices
  for (int v = 0; v < m; ++v) {
    Guard g;
    g.key = "V" + std::to_string(v) + ctx;
    g.kind = GuardKind::kVertex;
    g.a = v;
    g.f = [&p, &q, v](double t) {
      return p.vertex_distance(v, t) - q.vertex_distance(v, t);
    };
    g.lipschitz = speed;
    out->push_back(std::move(g));
  }
  // extension endpoints
  for (int o = 0; o < 2; ++o) {
    const FrozenMap& a = *maps[o];
    const FrozenMap& other = *maps[1 - o];
    const double sign = o == 0 ? 1.0 : -1.0;
    for (int v = 0; v < m; ++v) {
      if (!a.spm().has_chord(v)) continue;
      const int he = a.spm().topology().hit_edge[v];
      Guard g;
      g.key = "E" + std::to_string(o) + "." + std::to_string(v) + ctx;
      g.kind = GuardKind::kChordEnd;
      g.a = v;
      g.b = o;
      const Point pv = poly[v];
      g.f = [&a, &other, v, he, pv, sign](double t) {
        double lam = a.chord_lambda(v, t);
        if (!std::isfinite(lam)) return lam;
        Point e = a.chord_end(v, t);
        double da = a.vertex_distance(v, t) + dist(e, pv);
        return sign * (da - other.boundary_distance(he, lam, t));
      };
      g.lipschitz = a.chord_moves(v) ? 0 : speed;
      out->push_back(std::move(g));
    }
  }
  // adjacent crossings of different sites
  std::vector<PieceKind> kinds = arc_kinds(b);
  for (int i = 0; i + 1 < static_cast<int>(b.vertices.size()); ++i) {
    const BisectorVertex &x = b.vertices[i], &y = b.vertices[i + 1];
    if (x.owner == y.owner) continue;
    if (skip_nonvisible && nonvisible_run(kinds, i)) continue;
    int v = x.owner == 0 ? x.vertex : y.vertex;
    int w = x.owner == 0 ? y.vertex : x.vertex;
    const bool moving = p.chord_moves(v) || q.chord_moves(w);
    if (!moving &&
        !segments_intersect(poly[v], p.spm().chord_end(v), poly[w],
                            q.spm().chord_end(w)))
      continue;
    Guard g;
    g.key = "X" + std::to_string(v) + "." + std::to_string(w) + ctx;
    g.kind = GuardKind::kCrossingPair;
    g.a = v;
    g.b = w;
    const Point pv = poly[v], pw = poly[w];
    g.f = [&p, &q, v, w, pv, pw](double t) {
      Vec dv = p.chord_dir(v, t), dw = q.chord_dir(w, t);
      double s, u;
      if (!line_intersection(pv, pv + dv, pw, pw + dw, &s, &u))
        return std::numeric_limits<double>::quiet_NaN();
      Point ep = pv + dv * s;
      return p.vertex_distance(v, t) + dist(ep, pv) - q.vertex_distance(w, t) -
             dist(ep, pw);
    };
    g.lipschitz = moving ? 0 : speed;
    out->push_back(std::move(g));
  }
}

BisectorKds::BisectorKds(DomainPtr dom, const Trajectory& p,
                         const Trajectory& q, double t0, double horizon,
                         KdsMode mode)
    : dom_(std::move(dom)),
      traj_{p, q},
      now_(t0),
      horizon_(horizon),
      mode_(mode),
      cache_(march_options(horizon)) {
  if (!(horizon >= t0))
    throw Error(ErrorKind::kInvalidArgument, "horizon before start time");
  state_ = build_state(t0);
  sync_tournaments();
}

BisectorKds::State BisectorKds::build_state(double t) const {
  State s;
  s.time = t;
  auto sp = std::make_shared<ExtendedSpm>(build_spm(dom_, traj_[0].at(t)));
  auto sq = std::make_shared<ExtendedSpm>(build_spm(dom_, traj_[1].at(t)));
  sp->time = sq->time = t;
  s.p = sp;
  s.q = sq;
  try {
    s.bisector = build_bisector(*s.p, *s.q);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(e.what()) + " at t=" + std::to_string(t));
  }
  return s;
}

void BisectorKds::commit(State s) {
  if (!s.p->topology().same_as(state_.p->topology())) ++epoch_[0];
  if (!s.q->topology().same_as(state_.q->topology())) ++epoch_[1];
  state_ = std::move(s);
  now_ = std::max(now_, state_.time);
  sync_tournaments();
  fresh_ = false;
}

std::string BisectorKds::context() const {
  return "|" + std::to_string(epoch_[0]) + "," + std::to_string(epoch_[1]);
}

void BisectorKds::sync_tournaments() {
  if (mode_ != KdsMode::kResponsive) return;
  const int m = dom_->polygon().size();
  std::map<std::pair<int, int>, NonVisiblePair> cur;
  for (const NonVisiblePair& np :
       nonvisible_pairs(state_.bisector, *state_.p, *state_.q))
    cur[{np.vertex_p, np.vertex_q}] = np;
  for (auto it = stored_.begin(); it != stored_.end();) {
    auto c = cur.find(it->first);
    const StoredPair& sp = it->second;
    double value = sp.p_side ? sp.ep.value : -sp.ep.value;
    double anchor = sp.p_side ? sp.ep.anchor : -sp.ep.anchor;
    bool keep = c != cur.end() && c->second.p_side == sp.p_side &&
                c->second.root_p == sp.root_p && c->second.root_q == sp.root_q &&
                c->second.value == value && c->second.anchor == anchor;
    if (keep) {
      cur.erase(c);
      ++it;
      continue;
    }
    Group& g = groups_[{sp.root_p, sp.root_q}];
    (sp.p_side ? g.p_side : g.q_side).remove(sp.ep);
    it = stored_.erase(it);
  }
  for (const auto& [k, np] : cur) {
    StoredPair sp;
    sp.root_p = np.root_p;
    sp.root_q = np.root_q;
    sp.p_side = np.p_side;
    sp.ep.key = np.key;
    sp.ep.id = static_cast<int64_t>(np.vertex_p) * m + np.vertex_q;
    sp.ep.value = np.p_side ? np.value : -np.value;
    sp.ep.anchor = np.p_side ? np.anchor : -np.anchor;
    Group& g = groups_[{np.root_p, np.root_q}];
    (np.p_side ? g.p_side : g.q_side).insert(sp.ep);
    stored_[k] = sp;
  }
  for (auto it = groups_.begin(); it != groups_.end();) {
    if (it->second.p_side.empty() && it->second.q_side.empty()) {
      dropped_updates_ +=
          it->second.p_side.updates() + it->second.q_side.updates();
      it = groups_.erase(it);
    } else {
      ++it;
    }
  }
}

int64_t BisectorKds::tournament_updates() const {
  int64_t n = dropped_updates_;
  for (const auto& [k, g] : groups_) n += g.p_side.updates() + g.q_side.updates();
  return n;
}

int BisectorKds::tournament_entries() const {
  int n = 0;
  for (const auto& [k, g] : groups_) n += g.p_side.size() + g.q_side.size();
  return n;
}

bool BisectorKds::tournaments_consistent() const {
  for (const auto& [k, g] : groups_)
    for (const OffsetTournament* t : {&g.p_side, &g.q_side}) {
      if (t->empty()) continue;
      double flat = flat_max(t->entries(), t->root_entry()->anchor);
      if (std::fabs(flat - *t->root_max()) > 1e-9 * (1 + std::fabs(flat)))
        return false;
    }
  return true;
}

void BisectorKds::refresh() {
  if (fresh_) return;
  const Polygon& poly = dom_->polygon();
  FrozenMap P(state_.p, traj_[0]), Q(state_.q, traj_[1]);
  double cap = horizon_;
  bool cap_is_event = false;
  next_is_exit_ = false;
  for (int i = 0; i < 2; ++i) {
    const ExtendedSpm& s = i == 0 ? *state_.p : *state_.q;
    try {
      auto ev = next_spm_event(s, traj_[i], now_, horizon_);
      if (ev && ev->time < cap) {
        cap = ev->time;
        cap_is_event = true;
        next_is_exit_ = false;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kSiteExitsPolygon) throw;
      double te = boundary_exit_time(poly, traj_[i], now_);
      if (te < cap) {
        cap = te;
        cap_is_event = true;
        next_is_exit_ = true;
      }
    }
  }
  std::vector<Guard> guards;
  const std::string ctx = context();
  append_bisector_guards(P, Q, state_.bisector, ctx,
                         mode_ == KdsMode::kResponsive, &guards);
  if (mode_ == KdsMode::kResponsive) {
    const double speed = P.speed() + Q.speed();
    for (const auto& [k, grp] : groups_) {
      const Point rp = poly[k.first], rq = poly[k.second];
      auto z = [&P, &Q, rp, rq](double t) {
        return dist(P.site(t), rp) - dist(Q.site(t), rq);
      };
      for (int side = 0; side < 2; ++side) {
        const OffsetTournament& t = side == 0 ? grp.p_side : grp.q_side;
        if (t.empty()) continue;
        const double top = *t.max_value();
        Guard g;
        g.key = "T" + std::to_string(side) + "." + std::to_string(k.first) +
                "." + std::to_string(k.second) + ":" + key_num(top) + ctx;
        g.kind = GuardKind::kTournamentRoot;
        g.a = k.first;
        g.b = k.second;
        g.f = side == 0 ? std::function<double(double)>(
                              [z, top](double tt) { return top + z(tt); })
                        : std::function<double(double)>(
                              [z, top](double tt) { return top - z(tt); });
        g.lipschitz = speed;
        guards.push_back(std::move(g));
      }
    }
  }
  std::optional<double> best;
  std::vector<std::string> keys;
  for (const Guard& g : guards) {
    keys.push_back(g.key);
    auto f = cache_.failure(g, now_, cap);
    if (f && (!best || *f < *best)) best = f;
  }
  cache_.retain(keys);
  stats_.guards_computed = cache_.computed();
  stats_.guards_reused = cache_.reused();
  if (best && (!cap_is_event || *best < cap)) {
    next_time_ = best;
    next_is_exit_ = false;
  } else if (cap_is_event) {
    next_time_ = cap;
  } else {
    next_time_.reset();
  }
  fresh_ = true;
}

std::optional<double> BisectorKds::next_failure_time() {
  refresh();
  return next_time_;
}

std::optional<BisectorEvent> BisectorKds::next_event() {
  if (!pending_.empty()) return pending_.front();
  const double step = event_step(horizon_);
  while (true) {
    refresh();
    if (!next_time_) return std::nullopt;
    const double t = *next_time_;
    if (next_is_exit_)
      throw Error(ErrorKind::kSiteExitsPolygon,
                  "site reaches the boundary at t=" + std::to_string(t));
    State s = build_state(t + step);
    ++stats_.rebuilds;
    auto evs = classify_bisector_change(state_.bisector, s.bisector, t,
                                        dom_->polygon().size());
    if (evs.empty()) {
      ++stats_.internal_events;
      commit(std::move(s));
      continue;
    }
    staged_ = std::move(s);
    pending_.assign(evs.begin(), evs.end());
    return pending_.front();
  }
}

void BisectorKds::handle_event(const BisectorEvent& ev) {
  if (pending_.empty() || pending_.front().time != ev.time ||
      pending_.front().kind != ev.kind)
    throw Error(ErrorKind::kStaleEvent,
                "event at t=" + std::to_string(ev.time) + " is not pending");
  if (staged_) {
    commit(std::move(*staged_));
    staged_.reset();
  }
  pending_.pop_front();
}

std::vector<BisectorEvent> BisectorKds::run() {
  std::vector<BisectorEvent> log;
  while (auto ev = next_event()) {
    log.push_back(*ev);
    handle_event(*ev);
  }
  return log;
}

void BisectorKds::update_motion(int site, const Vec& velocity, double now) {
  if (site < 0 || site > 1)
    throw Error(ErrorKind::kInvalidArgument, "site index must be 0 or 1");
  if (now < now_)
    throw Error(ErrorKind::kStaleEvent, "motion update before current time");
  if (!pending_.empty() && now >= pending_.front().time)
    throw Error(ErrorKind::kStaleEvent, "motion update after a pending event");
  if (velocity.x == traj_[site].vel.x && velocity.y == traj_[site].vel.y) return;
  pending_.clear();
  staged_.reset();
  traj_[site] = traj_[site].with_velocity(now, velocity);
  ++epoch_[site];
  now_ = now;
  fresh_ = false;
}

}  // namespace kgvd
