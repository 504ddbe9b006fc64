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

#include <cmath>
#include <random>

#include "doctest.h"
#include "kgvd/geom/error.hpp"
#include "kgvd/gvd/forest.hpp"

using namespace kgvd;

namespace {

double walk_length(const DynamicSpmForest& f, int v) {
  double s = 0;
  for (int u = v; f.parent(u) >= 0; u = f.parent(u))
    s += dist(f.position(u), f.position(f.parent(u)));
  return s;
}

}  // namespace

TEST_CASE("chain path length") {
  DynamicSpmForest f(3);
  f.set_position(0, {0, 0});
  f.set_position(1, {3, 4});
  f.set_position(2, {3, 10});
  f.link(0, 1, 5);
  f.link(1, 2, 6);
  CHECK(f.path_length(2) == doctest::Approx(11));
  CHECK(f.path_length(0) == 0);
  CHECK(f.root(2) == 0);
}

TEST_CASE("cut and relink") {
  DynamicSpmForest f(4);
  f.link(0, 1, 1);
  f.link(1, 2, 2);
  f.link(0, 3, 5);
  f.cut(2);
  CHECK(f.path_length(2) == 0);
  f.link(3, 2, 1);
  CHECK(f.path_length(2) == doctest::Approx(6));
  CHECK(f.root(2) == 0);
  try {
    f.cut(0);
    FAIL("expected CutRoot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCutRoot);
  }
  // 0 -> 1 -> 2; after cutting 1, linking 1 below 2 closes a cycle
  DynamicSpmForest g(3);
  g.link(0, 1, 1);
  g.link(1, 2, 1);
  g.cut(1);
  try {
    g.link(2, 1, 1);
    FAIL("expected LinkCycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kLinkCycle);
  }
}

TEST_CASE("principal child is the straightest continuation") {
  DynamicSpmForest f(5);
  f.set_position(0, {0, 0});
  f.set_position(1, {1, 0});
  f.set_position(2, {2, 0.5});   // 26.6 degrees left
  f.set_position(3, {2, -0.2});  // 11.3 degrees right
  f.set_position(4, {1, 1});     // 90 degrees left
  f.link(0, 1, 1);
  for (int c : {2, 3, 4}) f.link(1, c, dist(f.position(1), f.position(c)));
  CHECK(f.principal_child(1) == 3);
  CHECK(f.principal_child(0) == -1);
  auto order = f.ordered_children(1);
  REQUIRE(order.size() == 3);
  CHECK(order[0] == 3);
  CHECK(order[1] == 2);
  CHECK(order[2] == 4);
}

TEST_CASE("random operations agree with walking") {
  const int n = 200;
  DynamicSpmForest f(n);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 100);
  for (int i = 0; i < n; ++i) f.set_position(i, {u(rng), u(rng)});
  int mismatches = 0;
  for (int step = 0; step < 20000; ++step) {
    int v = static_cast<int>(rng() % n);
    int w = static_cast<int>(rng() % n);
    int op = static_cast<int>(rng() % 4);
    if (op == 0 && f.parent(v) < 0 && v != w) {
      try {
        f.link(w, v, dist(f.position(v), f.position(w)));
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kLinkCycle);
      }
    } else if (op == 1 && f.parent(v) >= 0) {
      f.cut(v);
    } else if (op == 2) {
      if (std::fabs(f.path_length(v) - walk_length(f, v)) > 1e-9) ++mismatches;
    } else {
      int pc = f.principal_child(v);
      if (pc >= 0) {
        Vec in = f.position(v) - f.position(f.parent(v));
        double best = 1e300;
        for (int c : f.children(v)) {
          Vec out = f.position(c) - f.position(v);
          best = std::min(best, std::fabs(std::atan2(cross(in, out), dot(in, out))));
        }
        Vec out = f.position(pc) - f.position(v);
        if (std::fabs(std::atan2(cross(in, out), dot(in, out))) != best)
          ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}
