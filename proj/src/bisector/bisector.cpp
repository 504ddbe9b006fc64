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

#include "kgvd/bisector/bisector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kgvd/geom/error.hpp"
#include "kgvd/geom/roots.hpp"

namespace kgvd {

namespace {

struct Crossing {
  int owner;  // -1 start, -2 end
  int vertex;
  Point x;
  double d;
  int phase;
  Vec tau;
};

Vec gradient_dir(const Vec& up, const Vec& uq) {
  Vec g = up - uq;
  return {g.y, -g.x};
}

// Distance of x on the chord of `owner_map` at vertex v to the other map,
// with its apex.
struct ChordSolve {
  bool found = false;
  Point x;
};

// Crossing of the bisector with the chord of v in map a, where b is the
// other map. g = d_a - d_b increases from v to the chord end.
ChordSolve solve_chord(const ExtendedSpm& a, const ExtendedSpm& b, int v) {
  ChordSolve out;
  const Polygon& poly = a.domain().polygon();
  const Point pv = poly[v];
  const Point pe = a.chord_end(v);
  const double dv = a.vertex_distance(v);
  std::vector<double> cuts = {0.0, 1.0};
  for (int w = 0; w < poly.size(); ++w) {
    if (!b.has_chord(w)) continue;
    double s, u;
    if (line_intersection(pv, pe, poly[w], b.chord_end(w), &s, &u) && s > 0 &&
        s < 1 && u >= 0 && u <= 1)
      cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    if (hi - lo <= 1e-15) continue;
    Point x0 = lerp(pv, pe, lo), x1 = lerp(pv, pe, hi);
    SpmLocation loc = b.locate(lerp(pv, pe, 0.5 * (lo + hi)));
    Point ab = b.apex_point(loc.apex);
    double kb = b.apex_distance(loc.apex);
    auto roots = equal_distance_roots(pv, dv, ab, kb, x0, x1);
    if (!roots.empty()) {
      out.found = true;
      out.x = lerp(x0, x1, roots.front());
      return out;
    }
  }
  // fall back to bisection on the monotone difference
  auto g = [&](double s) {
    Point x = lerp(pv, pe, s);
    return dv + dist(x, pv) - b.distance(x);
  };
  double lo = 0, hi = 1;
  if (g(lo) > 0 || g(hi) < 0) return out;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  out.found = true;
  out.x = lerp(pv, pe, 0.5 * (lo + hi));
  return out;
}


}  // namespace

std::vector<int> Bisector::fingerprint() const {
  std::vector<int> f;
  f.push_back(start.edge);
  for (const BisectorVertex& v : vertices) {
    f.push_back(v.owner);
    f.push_back(v.vertex);
  }
  f.push_back(end.edge);
  return f;
}

std::string Bisector::fingerprint_string() const {
  std::ostringstream os;
  os << "e" << start.edge;
  for (const BisectorVertex& v : vertices)
    os << (v.owner == 0 ? " p" : " q") << v.vertex;
  os << " e" << end.edge;
  return os.str();
}

Point Bisector::node(int i) const {
  if (i == 0) return start.x;
  if (i == node_count() - 1) return end.x;
  return vertices[i - 1].x;
}

std::vector<Point> Bisector::polyline(int samples_per_arc) const {
  std::vector<Point> out;
  for (size_t i = 0; i < arcs.size(); ++i) {
    std::vector<Point> s = arcs[i].arc.sample(samples_per_arc);
    s.front() = node(static_cast<int>(i));
    s.back() = node(static_cast<int>(i) + 1);
    if (!out.empty()) s.erase(s.begin());
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

Bisector build_bisector(const ExtendedSpm& p, const ExtendedSpm& q) {
  const Domain& dom = p.domain();
  const Polygon& poly = dom.polygon();
  const int m = poly.size();
  const double scale = poly.diameter();
  const double vertex_tol = 1e-13 * scale;
  if (dist(p.site(), q.site()) <= dom.eps_geom)
    throw Error(ErrorKind::kIdenticalDistanceFields, "sites coincide");
  for (int v = 0; v < m; ++v) {
    if (std::fabs(p.vertex_distance(v) - q.vertex_distance(v)) <= vertex_tol)
      throw Error(ErrorKind::kDegenerateEquidistantVertex,
                  "vertex " + std::to_string(v) + " is equidistant");
  }

  // g = d_p - d_q at every boundary item, shared by all tests below
  std::vector<double> g_vertex(m);
  for (int v = 0; v < m; ++v)
    g_vertex[v] = p.vertex_distance(v) - q.vertex_distance(v);
  std::vector<double> g_chord[2] = {std::vector<double>(m, 0.0),
                                    std::vector<double>(m, 0.0)};
  std::vector<std::vector<std::pair<double, double>>> cuts_on(m);
  for (int owner = 0; owner < 2; ++owner) {
    const ExtendedSpm& a = owner == 0 ? p : q;
    const ExtendedSpm& b = owner == 0 ? q : p;
    for (int v = 0; v < m; ++v) {
      if (!a.has_chord(v)) continue;
      int he = a.topology().hit_edge[v];
      double ga = a.vertex_distance(v) + dist(a.chord_end(v), poly[v]) -
                  b.boundary_distance(he, a.chord_lambda(v));
      g_chord[owner][v] = owner == 0 ? ga : -ga;
      cuts_on[he].push_back({a.chord_lambda(v), g_chord[owner][v]});
    }
  }

  // boundary endpoints: sign changes of g between consecutive items
  struct Root {
    int edge;
    double lambda;
    int dir;  // -1: g goes from + to - (ccw)
    int apex_p, apex_q;
  };
  std::vector<Root> roots;
  for (int e = 0; e < m; ++e) {
    auto& cuts = cuts_on[e];
    cuts.push_back({0.0, g_vertex[e]});
    cuts.push_back({1.0, g_vertex[poly.next(e)]});
    std::sort(cuts.begin(), cuts.end());
    const Point a = poly[e], b = poly[poly.next(e)];
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i].first, hi = cuts[i + 1].first;
      if (!(hi > lo)) continue;
      const double mid = 0.5 * (lo + hi);
      const int ap = p.boundary_apex(e, mid), aq = q.boundary_apex(e, mid);
      const Point pa = p.apex_point(ap), qa = q.apex_point(aq);
      const double kp = p.apex_distance(ap), kq = q.apex_distance(aq);
      auto g = [&](double lam) {
        Point x = lerp(a, b, lam);
        return dist(x, pa) + kp - dist(x, qa) - kq;
      };
      const int s_lo = cuts[i].second < 0 ? -1 : 1;
      const int s_hi = cuts[i + 1].second < 0 ? -1 : 1;
      if (s_lo != s_hi) {
        double l = lo, h = hi;
        for (int it = 0; it < 200 && h - l > 0; ++it) {
          double c = 0.5 * (l + h);
          if (c <= l || c >= h) break;
          ((g(c) < 0 ? -1 : 1) == s_lo ? l : h) = c;
        }
        roots.push_back({e, 0.5 * (l + h), s_lo > 0 ? -1 : 1, ap, aq});
        continue;
      }
      // two roots inside one piece
      std::vector<double> in;
      for (double r : equal_distance_roots(pa, kp, qa, kq, lerp(a, b, lo),
                                           lerp(a, b, hi))) {
        double lam = lo + r * (hi - lo);
        if (lam > lo && lam < hi) in.push_back(lam);
      }
      if (in.size() == 2 && (g(0.5 * (in[0] + in[1])) < 0 ? -1 : 1) != s_lo) {
        roots.push_back({e, in[0], s_lo > 0 ? -1 : 1, ap, aq});
        roots.push_back({e, in[1], s_lo > 0 ? 1 : -1, ap, aq});
      }
    }
  }
  if (roots.size() != 2 || roots[0].dir == roots[1].dir)
    throw Error(ErrorKind::kDegeneracyDetected,
                "bisector meets the boundary " + std::to_string(roots.size()) +
                    " times");
  const Root& rs = roots[0].dir < 0 ? roots[0] : roots[1];
  const Root& re = roots[0].dir < 0 ? roots[1] : roots[0];

  Bisector out;
  auto make_end = [&](const Root& r) {
    BisectorEndpoint ep;
    ep.edge = r.edge;
    ep.lambda = r.lambda;
    ep.x = poly.edge_point(r.edge, r.lambda);
    ep.d = p.apex_distance(r.apex_p) + dist(ep.x, p.apex_point(r.apex_p));
    return ep;
  };
  out.start = make_end(rs);
  out.end = make_end(re);

  // crossings with extension segments
  std::vector<Crossing> cr;
  for (int owner = 0; owner < 2; ++owner) {
    const ExtendedSpm& a = owner == 0 ? p : q;
    const ExtendedSpm& b = owner == 0 ? q : p;
    for (int v = 0; v < m; ++v) {
      if (!a.has_chord(v)) continue;
      if ((g_vertex[v] < 0) == (g_chord[owner][v] < 0)) continue;
      ChordSolve s = solve_chord(a, b, v);
      if (!s.found)
        throw Error(ErrorKind::kDegeneracyDetected, "chord crossing not found");
      Crossing c;
      c.owner = owner;
      c.vertex = v;
      c.x = s.x;
      c.d = a.vertex_distance(v) + dist(s.x, poly[v]);
      Vec ua = normalized(poly[v] - (a.topology().parent[v] < 0
                                         ? a.site()
                                         : poly[a.topology().parent[v]]));
      SpmLocation lb = b.locate(s.x);
      Vec ub = normalized(s.x - b.apex_point(lb.apex));
      Vec up = owner == 0 ? ua : ub, uq = owner == 0 ? ub : ua;
      c.tau = gradient_dir(up, uq);
      c.phase = dot(c.tau, up) < 0 ? -1 : 1;
      cr.push_back(c);
    }
  }
  std::sort(cr.begin(), cr.end(), [](const Crossing& a, const Crossing& b) {
    if (a.phase != b.phase) return a.phase < b.phase;
    return a.phase < 0 ? a.d > b.d : a.d < b.d;
  });
  for (const Crossing& c : cr)
    out.vertices.push_back(
        {c.owner, c.vertex, c.x, c.d, c.phase < 0 ? -c.d : c.d});

  // anchors, propagated across the crossings
  int ap = rs.apex_p;
  int aq = rs.apex_q;
  std::vector<std::pair<int, int>> anchors = {{ap, aq}};
  for (const Crossing& c : cr) {
    int& cur = c.owner == 0 ? ap : aq;
    const ExtendedSpm& a = c.owner == 0 ? p : q;
    int par = a.topology().parent[c.vertex];
    if (cur == c.vertex) cur = par;
    else if (cur == par) cur = c.vertex;
    else
      throw Error(ErrorKind::kDegeneracyDetected, "inconsistent anchor chain");
    anchors.push_back({ap, aq});
  }
  if (ap != re.apex_p || aq != re.apex_q)
    throw Error(ErrorKind::kDegeneracyDetected, "anchor chain does not close");
  for (size_t i = 0; i < anchors.size(); ++i) {
    BisectorArc arc;
    arc.apex_p = anchors[i].first;
    arc.apex_q = anchors[i].second;
    arc.arc = HyperbolicArc(p.apex_point(arc.apex_p), p.apex_distance(arc.apex_p),
                            q.apex_point(arc.apex_q), q.apex_distance(arc.apex_q));
    arc.arc.t0 = arc.arc.param_of(out.node(static_cast<int>(i)));
    arc.arc.t1 = arc.arc.param_of(out.node(static_cast<int>(i) + 1));
    out.arcs.push_back(arc);
  }
  return out;
}

const char* piece_kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::kDoubleVisible: return "double-visible";
    case PieceKind::kSingleVisible: return "single-visible";
    case PieceKind::kNonVisible: return "non-visible";
  }
  return "?";
}

std::vector<PieceKind> arc_kinds(const Bisector& b) {
  std::vector<PieceKind> k;
  for (const BisectorArc& a : b.arcs) {
    int vis = (a.apex_p == kRootApex) + (a.apex_q == kRootApex);
    k.push_back(vis == 2 ? PieceKind::kDoubleVisible
                : vis == 1 ? PieceKind::kSingleVisible
                           : PieceKind::kNonVisible);
  }
  return k;
}

BisectorPieces decompose_pieces(const Bisector& b) {
  BisectorPieces out;
  std::vector<PieceKind> kinds = arc_kinds(b);
  auto vis_from = [&](int i) {
    if (kinds[i] != PieceKind::kSingleVisible) return -1;
    return b.arcs[i].apex_p == kRootApex ? 0 : 1;
  };
  for (size_t i = 0; i < kinds.size(); ++i) {
    int vf = vis_from(static_cast<int>(i));
    if (!out.pieces.empty() && out.pieces.back().kind == kinds[i] &&
        out.pieces.back().visible_from == vf) {
      out.pieces.back().last_arc = static_cast<int>(i);
      continue;
    }
    if (!out.pieces.empty()) out.separators.push_back(static_cast<int>(i) - 1);
    out.pieces.push_back({kinds[i], static_cast<int>(i), static_cast<int>(i), vf});
  }
  return out;
}

}  // namespace kgvd
