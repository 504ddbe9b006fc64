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

#include "kgvd/gvd/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kgvd/bisector/chain.hpp"
#include "kgvd/geom/error.hpp"

namespace kgvd {

namespace {

constexpr double kRootTol = 1e-12;
// only near-exact ties; kinetic probes come within 1e-10 of such moments
constexpr double kCocircularTol = 1e-11;

double boundary_pos(const EdgeEnd& e) { return e.edge + e.lambda; }

struct Piece {
  EdgeEnd from, to;
  std::vector<Point> line;
};

}  // namespace

Diagram Diagram::build(DomainPtr dom, std::vector<SpmPtr> spms) {
  Diagram d;
  d.dom_ = dom;
  d.spms_ = std::move(spms);
  const int n = d.n();
  const double scale = dom->polygon().diameter();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      d.bis_[{p, q}] = build_bisector(*d.spms_[p], *d.spms_[q]);

  std::map<std::array<int, 3>, int> center_index;
  for (const auto& [key, b] : d.bis_) {
    const int p = key.first, q = key.second;
    const double end = chain_end(b);
    // Each other site is equidistant with p and q at most once, so its
    // gap changes sign at most once along the chain.
    double lo = 0, hi = end;
    int lo_site = -1, hi_site = -1;
    bool empty = false;
    for (int r = 0; r < n && !empty; ++r) {
      if (r == p || r == q) continue;
      auto g = [&](double s) {
        return d.spms_[r]->distance(chain_point(b, s)) -
               chain_distance(b, *d.spms_[p], s);
      };
      double g0 = g(0), g1 = g(end);
      if (g0 > 0 && g1 > 0) continue;
      if (g0 <= 0 && g1 <= 0) {
        empty = true;
        continue;
      }
      double a0 = 0, a1 = end;
      while (a1 - a0 > kRootTol) {
        double mid = 0.5 * (a0 + a1);
        if ((g(mid) > 0) == (g0 > 0)) a0 = mid;
        else a1 = mid;
      }
      double root = 0.5 * (a0 + a1);
      if (g0 > 0) {
        if (root < hi) hi = root, hi_site = r;
      } else if (root > lo) {
        lo = root, lo_site = r;
      }
    }
    if (empty || lo >= hi) continue;
    const double s0 = lo, s1 = hi;
    DiagramEdge e;
    e.p = p;
    e.q = q;
    for (int side = 0; side < 2; ++side) {
      double s = side == 0 ? s0 : s1;
      EdgeEnd& end_ref = side == 0 ? e.a : e.b;
      end_ref.s = s;
      int r = side == 0 ? lo_site : hi_site;
      bool at_boundary = r < 0;
      if (at_boundary) {
        const BisectorEndpoint& bp = side == 0 ? b.start : b.end;
        end_ref.kind = EndKind::kBoundary;
        end_ref.edge = bp.edge;
        end_ref.lambda = bp.lambda;
        end_ref.x = bp.x;
        continue;
      }
      // a second site at the same distance means four cocircular sites
      Point x = chain_point(b, s);
      double dr = d.spms_[r]->distance(x);
      for (int o = 0; o < n; ++o) {
        if (o == p || o == q || o == r) continue;
        if (std::fabs(d.spms_[o]->distance(x) - dr) < kCocircularTol * scale)
          throw Error(ErrorKind::kDegenerateCocircularSites,
                      "four sites share a center");
      }
      std::array<int, 3> tri = {p, q, r};
      std::sort(tri.begin(), tri.end());
      auto it = center_index.find(tri);
      if (it == center_index.end()) {
        DiagramCenter c;
        c.sites = tri;
        c.x = x;
        c.d = chain_distance(b, *d.spms_[p], s);
        for (int j = 0; j < 3; ++j)
          c.apex[j] = d.spms_[tri[j]]->locate(x).apex;
        it = center_index.emplace(tri, static_cast<int>(d.centers_.size()))
                 .first;
        d.centers_.push_back(c);
      }
      end_ref.kind = EndKind::kCenter;
      end_ref.center = it->second;
      end_ref.third = r;
      end_ref.x = d.centers_[it->second].x;
    }
    for (int j = 0; j < static_cast<int>(b.vertices.size()); ++j)
      if (j + 1 > s0 && j + 1 < s1) e.vertices.push_back(j);
    d.edges_.push_back(std::move(e));
  }
  std::vector<int> refs(d.centers_.size(), 0);
  for (const DiagramEdge& e : d.edges_)
    for (const EdgeEnd* end : {&e.a, &e.b})
      if (end->kind == EndKind::kCenter) ++refs[end->center];
  for (size_t c = 0; c < refs.size(); ++c)
    if (refs[c] != 3)
      throw Error(ErrorKind::kDegeneracyDetected,
                  "center of sites " + std::to_string(d.centers_[c].sites[0]) +
                      "," + std::to_string(d.centers_[c].sites[1]) + "," +
                      std::to_string(d.centers_[c].sites[2]) + " closes " +
                      std::to_string(refs[c]) + " edges");
  return d;
}

bool Diagram::has_bisector(int p, int q) const {
  return bis_.count({std::min(p, q), std::max(p, q)}) > 0;
}

const Bisector& Diagram::bisector(int p, int q) const {
  auto it = bis_.find({std::min(p, q), std::max(p, q)});
  if (it == bis_.end())
    throw Error(ErrorKind::kInvalidArgument, "no bisector for that pair");
  return it->second;
}

int Diagram::degree1_count() const {
  int c = 0;
  for (const DiagramEdge& e : edges_)
    c += (e.a.kind == EndKind::kBoundary) + (e.b.kind == EndKind::kBoundary);
  return c;
}

int Diagram::degree2_count() const {
  int c = 0;
  for (const DiagramEdge& e : edges_) c += static_cast<int>(e.vertices.size());
  return c;
}

std::string Diagram::fingerprint() const {
  std::vector<std::string> parts;
  for (const DiagramEdge& e : edges_) {
    const Bisector& b = bisector(e.p, e.q);
    auto end_tag = [](const EdgeEnd& x) {
      return x.kind == EndKind::kBoundary ? "e" + std::to_string(x.edge)
                                          : "c" + std::to_string(x.third);
    };
    std::string s = std::to_string(e.p) + "-" + std::to_string(e.q) + "[" +
                    end_tag(e.a);
    for (int j : e.vertices) {
      const BisectorVertex& v = b.vertices[j];
      s += " " + std::to_string(v.owner == 0 ? e.p : e.q) + ":" +
           std::to_string(v.vertex);
    }
    s += " " + end_tag(e.b) + "]";
    parts.push_back(s);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const std::string& s : parts) out += (out.empty() ? "" : ";") + s;
  return out;
}

int Diagram::nearest_site(const Point& x) const {
  int best = -1;
  double bd = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n(); ++i) {
    double dd = spms_[i]->distance(x);
    if (dd < bd) {
      bd = dd;
      best = i;
    }
  }
  return best;
}

std::vector<Point> Diagram::edge_polyline(int e, double tol) const {
  const DiagramEdge& edge = edges_[e];
  auto line = chain_polyline(bisector(edge.p, edge.q), edge.a.s, edge.b.s, tol);
  line.front() = edge.a.x;
  line.back() = edge.b.x;
  return line;
}

std::vector<Point> Diagram::cell_ring(int i, double tol) const {
  const Polygon& poly = dom_->polygon();
  std::vector<Piece> pieces;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const DiagramEdge& edge = edges_[e];
    if (edge.p != i && edge.q != i) continue;
    Piece pc;
    pc.line = edge_polyline(e, tol);
    if (edge.p == i) {
      std::reverse(pc.line.begin(), pc.line.end());
      pc.from = edge.b;
      pc.to = edge.a;
    } else {
      pc.from = edge.a;
      pc.to = edge.b;
    }
    pieces.push_back(std::move(pc));
  }
  if (pieces.empty()) return poly.vertices();
  const int m = poly.size();
  std::vector<char> used(pieces.size(), 0);
  std::vector<Point> ring;
  int cur = 0;
  while (!used[cur]) {
    used[cur] = 1;
    const Piece& pc = pieces[cur];
    ring.insert(ring.end(), pc.line.begin(), pc.line.end() - 1);
    int next = -1;
    if (pc.to.kind == EndKind::kCenter) {
      for (size_t k = 0; k < pieces.size(); ++k)
        if (pieces[k].from.kind == EndKind::kCenter &&
            pieces[k].from.center == pc.to.center && static_cast<int>(k) != cur)
          next = static_cast<int>(k);
      if (next < 0)
        throw Error(ErrorKind::kDegeneracyDetected, "open cell at a center");
    } else {
      // walk the polygon boundary to the next piece of this cell
      double from = boundary_pos(pc.to), best = 1e300;
      for (size_t k = 0; k < pieces.size(); ++k) {
        if (pieces[k].from.kind != EndKind::kBoundary) continue;
        double ahead = boundary_pos(pieces[k].from) - from;
        if (ahead < 0) ahead += m;
        if (ahead < best) {
          best = ahead;
          next = static_cast<int>(k);
        }
      }
      ring.push_back(pc.to.x);
      const EdgeEnd& target = pieces[next].from;
      int e = pc.to.edge;
      if (!(e == target.edge && target.lambda >= pc.to.lambda)) {
        do {
          e = poly.next(e);
          ring.push_back(poly[e]);
        } while (e != target.edge);
      }
    }
    cur = next;
  }
  for (char u : used)
    if (!u) throw Error(ErrorKind::kDegeneracyDetected, "cell is not one ring");
  return ring;
}

double Diagram::cell_area(int i) const {
  return signed_area(cell_ring(i, 1e-8 * dom_->polygon().diameter()));
}

int Diagram::cell_label(const Point& x) const {
  if (rings_.empty())
    for (int i = 0; i < n(); ++i)
      rings_.push_back(cell_ring(i, 1e-8 * dom_->polygon().diameter()));
  for (int i = 0; i < n(); ++i)
    if (ring_contains(rings_[i], x)) return i;
  return -1;
}

}  // namespace kgvd
