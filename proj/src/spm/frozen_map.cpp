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

#include "kgvd/spm/frozen_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kgvd {

FrozenMap::FrozenMap(std::shared_ptr<const ExtendedSpm> spm,
                     const Trajectory& traj)
    : spm_(std::move(spm)), traj_(traj) {
  const int m = spm_->domain().polygon().size();
  edge_chords_.assign(m, {});
  for (int v = 0; v < m; ++v)
    if (spm_->has_chord(v)) edge_chords_[spm_->topology().hit_edge[v]].push_back(v);
  for (auto& l : edge_chords_)
    std::sort(l.begin(), l.end(), [&](int a, int b) {
      return spm_->chord_lambda(a) < spm_->chord_lambda(b);
    });
}

double FrozenMap::vertex_distance(int v, double t) const {
  const SpmTopology& tp = spm_->topology();
  return dist(site(t), spm_->domain().polygon()[tp.root_child[v]]) + tp.tail[v];
}

Point FrozenMap::apex_point(int apex, double t) const {
  return apex < 0 ? site(t) : spm_->domain().polygon()[apex];
}

double FrozenMap::apex_distance(int apex, double t) const {
  return apex < 0 ? 0.0 : vertex_distance(apex, t);
}

bool FrozenMap::chord_moves(int v) const {
  return spm_->topology().parent[v] < 0;
}

Vec FrozenMap::chord_dir(int v, double t) const {
  const Polygon& poly = spm_->domain().polygon();
  int par = spm_->topology().parent[v];
  return poly[v] - (par < 0 ? site(t) : poly[par]);
}

double FrozenMap::chord_lambda(int v, double t) const {
  if (!chord_moves(v)) return spm_->chord_lambda(v);
  const Polygon& poly = spm_->domain().polygon();
  int e = spm_->topology().hit_edge[v];
  double s, u;
  if (!line_intersection(poly[v], poly[v] + chord_dir(v, t), poly[e],
                         poly[poly.next(e)], &s, &u))
    return std::numeric_limits<double>::quiet_NaN();
  return u;
}

Point FrozenMap::chord_end(int v, double t) const {
  if (!chord_moves(v)) return spm_->chord_end(v);
  return spm_->domain().polygon().edge_point(spm_->topology().hit_edge[v],
                                             chord_lambda(v, t));
}

int FrozenMap::boundary_apex(int edge, double lambda, double t) const {
  const auto& pieces = spm_->edge_pieces(edge);
  const auto& chords = edge_chords_[edge];
  size_t k = 0;
  while (k < chords.size() && chord_lambda(chords[k], t) < lambda) ++k;
  if (pieces.size() != chords.size() + 1) return spm_->boundary_apex(edge, lambda);
  return pieces[k].apex;
}

double FrozenMap::boundary_distance(int edge, double lambda, double t) const {
  Point x = spm_->domain().polygon().edge_point(edge, lambda);
  return distance_via(boundary_apex(edge, lambda, t), x, t);
}

}  // namespace kgvd
