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

#ifndef KGVD_BISECTOR_BISECTOR_HPP_
#define KGVD_BISECTOR_BISECTOR_HPP_

#include <string>
#include <vector>

#include "kgvd/geom/hyperbolic_arc.hpp"
#include "kgvd/spm/spm.hpp"

namespace kgvd {

// Endpoint of a bisector on the polygon boundary.
struct BisectorEndpoint {
  int edge = -1;
  double lambda = 0;
  Point x;
  double d = 0;  // common distance
};

// Degree-2 vertex: the bisector crosses the extension segment of `vertex`
// in the map of `owner` (0 = first site, 1 = second site).
struct BisectorVertex {
  int owner = 0;
  int vertex = -1;
  Point x;
  double d = 0;
  double order_key = 0;  // increases from start to end
};

struct BisectorArc {
  int apex_p = kRootApex;
  int apex_q = kRootApex;
  HyperbolicArc arc;
};

// Geodesic bisector of two sites. The first site lies to the right when
// walking from `start` to `end`.
struct Bisector {
  BisectorEndpoint start, end;
  std::vector<BisectorVertex> vertices;
  std::vector<BisectorArc> arcs;  // vertices.size() + 1 arcs

  // [edge(start), (owner, vertex)..., edge(end)] encoded as integers.
  std::vector<int> fingerprint() const;
  std::string fingerprint_string() const;
  // Point sequence start, vertices..., end.
  Point node(int i) const;
  int node_count() const { return static_cast<int>(vertices.size()) + 2; }
  std::vector<Point> polyline(int samples_per_arc) const;
};

Bisector build_bisector(const ExtendedSpm& p, const ExtendedSpm& q);

enum class PieceKind { kDoubleVisible, kSingleVisible, kNonVisible };
const char* piece_kind_name(PieceKind k);

struct BisectorPiece {
  PieceKind kind = PieceKind::kNonVisible;
  int first_arc = 0;
  int last_arc = 0;  // inclusive
  int visible_from = -1;  // for single-visible pieces: 0 or 1
};

struct BisectorPieces {
  std::vector<BisectorPiece> pieces;
  std::vector<int> separators;  // vertex indices between pieces
};

BisectorPieces decompose_pieces(const Bisector& b);
// Classification of every arc.
std::vector<PieceKind> arc_kinds(const Bisector& b);

}  // namespace kgvd

#endif  // KGVD_BISECTOR_BISECTOR_HPP_
