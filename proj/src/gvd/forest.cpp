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

#include "kgvd/gvd/forest.hpp"

#include <algorithm>
#include <cmath>

#include "kgvd/geom/error.hpp"

namespace kgvd {

DynamicSpmForest::DynamicSpmForest(int nodes)
    : t_(nodes), parent_(nodes, -1), children_(nodes), pos_(nodes) {}

bool DynamicSpmForest::is_splay_root(int x) const {
  int u = t_[x].up;
  return u < 0 || (t_[u].ch[0] != x && t_[u].ch[1] != x);
}

void DynamicSpmForest::pull(int x) {
  double s = t_[x].val;
  for (int c : t_[x].ch)
    if (c >= 0) s += t_[c].sum;
  t_[x].sum = s;
}

void DynamicSpmForest::rotate(int x) {
  int y = t_[x].up, z = t_[y].up;
  int dx = t_[y].ch[1] == x;
  if (!is_splay_root(y)) t_[z].ch[t_[z].ch[1] == y] = x;
  t_[x].up = z;
  int b = t_[x].ch[dx ^ 1];
  t_[y].ch[dx] = b;
  if (b >= 0) t_[b].up = y;
  t_[x].ch[dx ^ 1] = y;
  t_[y].up = x;
  pull(y);
  pull(x);
}

void DynamicSpmForest::splay(int x) {
  while (!is_splay_root(x)) {
    int y = t_[x].up;
    if (!is_splay_root(y)) {
      int z = t_[y].up;
      bool zig_zig = (t_[z].ch[1] == y) == (t_[y].ch[1] == x);
      rotate(zig_zig ? y : x);
    }
    rotate(x);
  }
}

void DynamicSpmForest::access(int x) {
  int last = -1;
  for (int y = x; y >= 0; y = t_[y].up) {
    splay(y);
    t_[y].ch[1] = last;
    pull(y);
    last = y;
  }
  splay(x);
}

int DynamicSpmForest::root(int v) {
  access(v);
  int r = v;
  while (t_[r].ch[0] >= 0) r = t_[r].ch[0];
  splay(r);
  return r;
}

void DynamicSpmForest::link(int parent, int v, double length) {
  if (parent_[v] >= 0)
    throw Error(ErrorKind::kInvalidArgument, "link target is not a root");
  if (root(parent) == v)
    throw Error(ErrorKind::kLinkCycle, "link would close a cycle");
  access(v);
  t_[v].val = length;
  pull(v);
  t_[v].up = parent;
  parent_[v] = parent;
  children_[parent].insert(v);
}

void DynamicSpmForest::cut(int v) {
  if (parent_[v] < 0) throw Error(ErrorKind::kCutRoot, "cut of a root");
  access(v);
  int l = t_[v].ch[0];
  t_[l].up = -1;
  t_[v].ch[0] = -1;
  t_[v].val = 0;
  pull(v);
  children_[parent_[v]].erase(v);
  parent_[v] = -1;
}

void DynamicSpmForest::set_length(int v, double length) {
  if (parent_[v] < 0) throw Error(ErrorKind::kCutRoot, "root has no edge");
  access(v);
  t_[v].val = length;
  pull(v);
}

double DynamicSpmForest::path_length(int v) {
  access(v);
  return t_[v].sum;
}

int DynamicSpmForest::principal_child(int u) const {
  if (parent_[u] < 0 || children_[u].empty()) return -1;
  Vec in = pos_[u] - pos_[parent_[u]];
  int best = -1;
  double best_angle = 1e300;
  for (int c : children_[u]) {
    Vec out = pos_[c] - pos_[u];
    double a = std::fabs(std::atan2(cross(in, out), dot(in, out)));
    if (a < best_angle) {
      best_angle = a;
      best = c;
    }
  }
  return best;
}

std::vector<int> DynamicSpmForest::ordered_children(int u) const {
  std::vector<int> out(children_[u].begin(), children_[u].end());
  if (out.empty()) return out;
  int first = principal_child(u);
  Vec ref = first >= 0 ? pos_[first] - pos_[u] : Vec{1, 0};
  auto angle = [&](int c) {
    Vec d = pos_[c] - pos_[u];
    double a = std::atan2(cross(ref, d), dot(ref, d));
    return a < 0 ? a + 2 * M_PI : a;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](int a, int b) { return angle(a) < angle(b); });
  return out;
}

}  // namespace kgvd
