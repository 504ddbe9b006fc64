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

#ifndef KGVD_GVD_FOREST_HPP_
#define KGVD_GVD_FOREST_HPP_

#include <set>
#include <vector>

#include "kgvd/geom/point.hpp"

namespace kgvd {

// Rooted forest with path-length queries (splay-based link/cut tree) and
// angularly ordered children. Node positions drive the child order.
class DynamicSpmForest {
 public:
  explicit DynamicSpmForest(int nodes = 0);

  int size() const { return static_cast<int>(parent_.size()); }
  void set_position(int v, const Point& x) { pos_[v] = x; }
  const Point& position(int v) const { return pos_[v]; }

  // Errors: LinkCycle when parent lies in the tree of v, InvalidArgument
  // when v is not a root.
  void link(int parent, int v, double length);
  // Errors: CutRoot.
  void cut(int v);
  void set_length(int v, double length);

  int parent(int v) const { return parent_[v]; }
  int root(int v);
  double path_length(int v);
  // Child whose edge continues the edge into u most nearly straight;
  // -1 for leaves and for roots.
  int principal_child(int u) const;
  // Children in counterclockwise order starting at the principal child.
  std::vector<int> ordered_children(int u) const;
  const std::set<int>& children(int u) const { return children_[u]; }

 private:
  struct Node {
    int ch[2] = {-1, -1};
    int up = -1;  // splay parent or path parent
    double val = 0, sum = 0;
  };
  bool is_splay_root(int x) const;
  void pull(int x);
  void rotate(int x);
  void splay(int x);
  void access(int x);

  std::vector<Node> t_;
  std::vector<int> parent_;
  std::vector<std::set<int>> children_;
  std::vector<Point> pos_;
};

}  // namespace kgvd

#endif  // KGVD_GVD_FOREST_HPP_
